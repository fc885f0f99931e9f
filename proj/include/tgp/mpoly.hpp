#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "tgp/monomial.hpp"
#include "tgp/permutation.hpp"
#include "tgp/rational.hpp"

namespace tgp {

/// Sparse multivariate polynomial over exact rationals in t_1..t_d.
/// Terms are kept sorted descending in degrevlex with no zero coefficients,
/// which makes equality a plain vector comparison and the degrevlex leading
/// term O(1).
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }
  /// Normalizes arbitrary (monomial, coefficient) data.
  MPoly(int nvars, std::vector<Term> terms);

  static MPoly zero(int nvars) { return MPoly(nvars); }
  static MPoly constant(int nvars, const Rat& c);
  static MPoly one(int nvars) { return constant(nvars, 1); }
  static MPoly variable(int nvars, int i);  // t_i, 1-based
  static MPoly monomial(const Monomial& m, const Rat& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  Rat coeff(const Monomial& m) const;
  /// Leading term with respect to an arbitrary order (degrevlex is O(1)).
  const Term& leading(MonomialOrder ord) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  /// this += c * m * g, the mixed operation reduction loops live on.
  void add_scaled(const Rat& c, const Monomial& m, const MPoly& g);

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Right S_d-action: substitutes t_j -> t_{sigma(j)}.
  MPoly apply_permutation(const Permutation& sigma) const;
  /// Substitutes t_k -> b*t_k + c in every variable; requires b != 0.
  MPoly shift_scale(const Rat& b, const Rat& c) const;
  Rat evaluate(const std::vector<Rat>& point) const;
  /// Extracts the coefficient of t_last^k as a polynomial in the remaining
  /// variables (still represented in the full ring); used by series checks.
  MPoly coefficient_of_var(int var, int power) const;

  std::string str() const;  // "3/2*t1^2*t3 - t2"

 private:
  static void check_nvars(int nvars);
  void normalize(std::vector<Term> terms);

  int nvars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// e_r over the variable subset J (1-based indices); e_0 = 1, and r > #J
/// gives the zero polynomial.
MPoly elementary_symmetric(const std::vector<int>& J, int r, int nvars);

/// h_k evaluated at a rational vector; h_0 = 1.
Rat complete_homogeneous_eval(const std::vector<Rat>& a, int k);

}  // namespace tgp
