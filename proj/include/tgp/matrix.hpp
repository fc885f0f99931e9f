#pragma once

#include <iosfwd>
#include <vector>

#include "tgp/rational.hpp"

namespace tgp {

/// Dense matrix over exact rationals. Small sizes only (quotient
/// dimensions at desk scale).
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator*(const Rat& c) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatMat transpose() const;
  Rat trace() const;
  bool is_zero() const;
  std::vector<Rat> row(int i) const;
  /// Row vector times matrix (right action on row vectors).
  std::vector<Rat> apply_row(const std::vector<Rat>& v) const;
  Rat determinant() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

std::ostream& operator<<(std::ostream& os, const RatMat& m);

/// Incrementally built row space in reduced echelon form; used to grow
/// invariant subspaces until stable.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}
  /// Returns true when the vector enlarged the space.
  bool insert(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  int cols_;
  std::vector<std::vector<Rat>> rows_;  // reduced echelon, sorted by pivot
  std::vector<int> pivot_;
};

}  // namespace tgp
