#pragma once

#include <iosfwd>
#include <vector>

#include "tgp/partition.hpp"

namespace tgp {

/// Permutation of {1..d}, stored by its 1-based image list.
/// Composition is read left to right: (p * q)(j) = q(p(j)), matching the
/// right action on polynomials used throughout.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int d);
  /// Simple transposition sigma_i = (i, i+1), 1 <= i < d.
  static Permutation transposition(int d, int i);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int j) const { return img_[j - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& q) const;  // left-to-right
  Permutation inverse() const;
  bool is_identity() const;

  Partition cycle_type() const;
  int sign() const;

  /// Indices i1,...,ik with *this = s_{i1} * s_{i2} * ... * s_{ik}.
  std::vector<int> adjacent_word() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Canonical representative of a conjugacy class: cycles laid out on
/// consecutive blocks, largest cycle first.
Permutation class_representative(const Partition& cycle_type);

}  // namespace tgp
