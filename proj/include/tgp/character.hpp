#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "tgp/partition.hpp"
#include "tgp/permutation.hpp"
#include "tgp/rational.hpp"

namespace tgp {

/// Integer character table of S_d, rows indexed by irreducibles and
/// columns by cycle types, both in the partitions_of(d) order. Built by
/// the Murnaghan-Nakayama recursion; tables are cached and immutable, so
/// shared concurrent use is safe.
class CharacterTable {
 public:
  /// 1 <= d <= 8.
  static const CharacterTable& get(int d);

  int d() const { return d_; }
  const std::vector<Partition>& labels() const { return labels_; }
  long long value(const Partition& irrep, const Partition& cls) const;
  long long class_size(const Partition& cls) const;
  int index_of(const Partition& p) const;

 private:
  explicit CharacterTable(int d);

  int d_;
  std::vector<Partition> labels_;
  std::vector<std::vector<long long>> chi_;  // [irrep][class]
  std::vector<long long> class_size_;
};

/// Rational-valued class function on S_d.
struct ClassFunction {
  int d = 0;
  std::map<Partition, Rat> values;  // keyed by cycle type

  Rat at(const Partition& cls) const;
};

/// Multiplicity function mu -> [V : L(mu)]; zero entries are not stored.
struct CharacterVector {
  int d = 0;
  std::map<Partition, long long> mult;

  long long at(const Partition& p) const;
  void add(const Partition& p, long long m);
  bool operator==(const CharacterVector& o) const;
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const CharacterVector& v);

CharacterVector trivial_character(int d);
CharacterVector sign_character(int d);
CharacterVector irreducible_character(const Partition& lam);

/// Class function of a (virtual) module with the given multiplicities.
ClassFunction to_class_function(const CharacterVector& v);

/// Inner-product decomposition m_lam = (1/d!) sum_c |c| phi(c) chi_lam(c);
/// throws integrity_error when some multiplicity is negative or
/// non-integral (a corrupted trace computation upstream).
CharacterVector decompose(const ClassFunction& phi);

/// Tensoring with the sign representation: multiplicity of mu becomes the
/// multiplicity of its transpose.
CharacterVector sign_twist(const CharacterVector& v);

/// Character of the induced module Ind_{S_d1 x S_d2}^{S_d}(L_1 x L_2),
/// computed by splitting cycle types between the two factors.
CharacterVector induced_character(const CharacterVector& v1,
                                  const CharacterVector& v2);

/// Sum of dim L(mu) weighted by multiplicities.
long long character_dimension(const CharacterVector& v);

/// Young's rule: character {mu -> K_{mu, content}} of the permutation
/// module induced from the trivial representation of the Young subgroup
/// of type `content`.
CharacterVector young_rule_character(const Partition& content);

}  // namespace tgp
