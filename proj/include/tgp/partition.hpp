#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgp/error.hpp"

namespace tgp {

/// Integer partition: weakly decreasing positive parts. Zero parts are
/// stripped on construction; the empty partition (d = 0) is legal and is
/// the identity for concatenation-style operations.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses a comma-separated part list, e.g. "3,2,1". "" is the empty
  /// partition.
  static Partition parse(const std::string& s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return d_; }              // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  /// 1-based part access; parts beyond the length are 0.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  bool empty() const { return parts_.empty(); }

  std::string str() const;  // "3,2,1"

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  /// Lexicographic on part vectors; a total order usable as a map key.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Conjugate partition: part i of the result counts the rows of length >= i.
Partition transpose(const Partition& lam);

/// Dominance order: true iff every prefix sum of lam is <= the matching
/// prefix sum of mu. Requires |lam| = |mu|.
bool dominance_leq(const Partition& lam, const Partition& mu);

/// Number of boxes in rows n+1, ..., l(lam); m_lambda(lam, 0) = |lam|.
/// Requires 0 <= n < l(lam).
int m_lambda(const Partition& lam, int n);

/// n(mu) = sum_j mu_j * (j - 1).
long long n_stat(const Partition& mu);

/// All partitions of d in descending lexicographic order, (d) first and
/// (1,...,1) last. partitions_of(0) = { empty }.
const std::vector<Partition>& partitions_of(int d);

long long factorial(int n);
long long binomial(int n, int k);

/// Dimension of the irreducible S_d-module labeled by lam (hook lengths).
long long hook_dimension(const Partition& lam);

/// Word: finite sequence of positive integers.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}
  static Word parse(const std::string& s);  // space-separated integers

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  std::string str() const;

  /// Occurrence counts of 1..max(w), trailing zeros kept.
  std::vector<int> content() const;
  /// The content as a partition; throws precondition_error when the counts
  /// are not weakly decreasing (after stripping trailing zeros).
  Partition content_partition() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Decomposition into standard subwords by the rightmost-selection rule:
/// start from the rightmost 1, then repeatedly take the rightmost i+1 to
/// the left of the previous pick, wrapping to the rightmost occurrence
/// overall when none lies to the left. Requires partition content.
std::vector<Word> standard_subwords(const Word& w);

/// Cocharge of a word with partition content: sum of the recursive
/// cocharges of its standard subwords.
long long cocharge(const Word& w);

/// Semi-standard Young tableau: rows weakly increase left to right,
/// columns strictly increase top to bottom (English convention).
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);
  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const Tableau& t);

/// Row reading word, bottom row first, each row left to right.
Word reading_word(const Tableau& t);

/// All SSYT of the given shape and content. Requires |shape| = |content|.
std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                    const Partition& content);

/// K_{lam,mu} = #SSYT(lam, mu).
long long kostka_number(const Partition& lam, const Partition& mu);

/// Polynomial in q with non-negative integer coefficients; trailing zeros
/// stripped.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<long long> coeff);
  static QPoly monomial(int degree, long long c = 1);

  const std::vector<long long>& coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  long long at(int degree) const;
  long long eval_at_one() const;
  QPoly& operator+=(const QPoly& o);

  std::string str() const;  // "q^2 + q^4" style
  bool operator==(const QPoly& o) const { return coeff_ == o.coeff_; }

 private:
  std::vector<long long> coeff_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Modified Kostka-Foulkes polynomial: cocharge generating function over
/// SSYT(lam, mu). Requires |lam| = |mu|.
QPoly modified_kostka(const Partition& lam, const Partition& mu);

}  // namespace tgp
