#pragma once

#include <map>

#include "tgp/character.hpp"
#include "tgp/tanisaki.hpp"

namespace tgp {

/// Multiplicity function of irreducible highest-weight modules of
/// sl_{n+1}, indexed by partitions with at most n parts (dominant
/// weights).
struct GDecomposition {
  int rank = 0;  // n
  std::map<Partition, long long> mult;

  long long at(const Partition& p) const;
  void add(const Partition& p, long long m);
  bool operator==(const GDecomposition& o) const {
    return rank == o.rank && mult == o.mult;
  }
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GDecomposition& g);

/// dim V(wt(lam)) for sl_{n+1} by the hook content formula (SSYT of shape
/// lam with entries bounded by n+1).
long long gmodule_dimension(const Partition& lam, int n);

/// Decomposition of V(omega_{lam^t_1}) x ... x V(omega_{lam^t_{lam_1}}),
/// computed by the iterated column Pieri rule (each fundamental factor
/// adds a vertical strip). The independent oracle for the Weyl-module
/// g-structure. Requires |lam| <= n.
GDecomposition weyl_gmodule_decomposition(const Partition& lam, int n);

/// Pieri step: tensor an existing decomposition with V(omega_k).
GDecomposition pieri_column_step(const GDecomposition& dec, int k);

/// Image of an S_d-character under the Schur-Weyl functor: each L(mu)
/// contributes V(wt(mu)) with the same multiplicity. Requires d <= n.
GDecomposition schur_weyl_image(const CharacterVector& v, int n);

/// Character-level verification: the image of the amended quotient's
/// character equals the Pieri-rule decomposition. Requires |lam| <= n.
bool dualweyl_check(const Partition& lam, const EvalParams& a, int n);

}  // namespace tgp
