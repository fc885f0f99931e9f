#pragma once

#include <vector>

#include "tgp/matrix.hpp"
#include "tgp/mpoly.hpp"

namespace tgp {

/// Reduced Groebner basis: monic generators, no term of any element
/// divisible by the leading monomial of another, sorted ascending by
/// leading monomial. Output is deterministic for a fixed input sequence.
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::degrevlex;
  int nvars = 0;
  std::vector<MPoly> gens;

  bool operator==(const GroebnerBasis& o) const {
    return order == o.order && nvars == o.nvars && gens == o.gens;
  }
};

/// Buchberger's algorithm with the coprimality and chain criteria and
/// smallest-lcm-first pair selection. The empty input yields the zero
/// ideal (empty basis).
GroebnerBasis buchberger(const std::vector<MPoly>& gens, MonomialOrder order,
                         int nvars);

/// Unique remainder of f modulo G: no term of the result is divisible by
/// any leading monomial of G. Linear in f.
MPoly normal_form(const MPoly& f, const GroebnerBasis& G);

/// Standard monomials (those outside the leading-term ideal), ascending in
/// the basis order. Throws precondition_error("ideal is not
/// zero-dimensional") when some variable has no pure power among the
/// leading monomials.
std::vector<Monomial> quotient_basis(const GroebnerBasis& G);

/// True iff the two generating sets span the same ideal (reduced bases
/// coincide).
bool ideal_equal(const std::vector<MPoly>& gens1, const std::vector<MPoly>& gens2,
                 MonomialOrder order, int nvars);

/// Matrix of right multiplication by f on the quotient, in the standard
/// monomial basis B: column j holds the coordinates of normal_form(B[j]*f).
RatMat multiplication_matrix(const MPoly& f, const GroebnerBasis& G,
                             const std::vector<Monomial>& B);

/// Coordinates of normal_form(f) in the standard monomial basis; throws
/// integrity_error if the normal form leaves the span of B.
std::vector<Rat> quotient_coordinates(const MPoly& f, const GroebnerBasis& G,
                                      const std::vector<Monomial>& B);

/// Post-hoc certificate: every S-polynomial of basis pairs reduces to zero
/// and every original generator lies in the span of the basis.
bool verify_groebner(const std::vector<MPoly>& original_gens,
                     const GroebnerBasis& G);

}  // namespace tgp
