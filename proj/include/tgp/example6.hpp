#pragma once

#include "tgp/tanisaki.hpp"

namespace tgp {

/// Module invariants that separate the three b->a limits: dimension, the
/// S_d-character, and for each isotypic component the dimension of its
/// closure under the t-action (1 or 2 = submodule, full = generates).
struct ModuleFingerprint {
  long long dim = 0;
  CharacterVector character;
  std::map<Partition, long long> t_span;

  bool operator==(const ModuleFingerprint& o) const {
    return dim == o.dim && character == o.character && t_span == o.t_span;
  }
  std::string str() const;
};

/// Computes the fingerprint from generator matrices; enumerates all of
/// S_d, so intended for small d.
ModuleFingerprint fingerprint(const RepMatrices& M);

/// The 3-dimensional module with two distinct column labels a, b on the
/// shape (2,1): generator matrices in the first distinguished basis.
RepMatrices two_label_module(const Rat& a, const Rat& b);

/// The three b->a limits, taken in three different bases (0: direct sum
/// basis, 1: cyclic basis with invariant 2-dimensional part, 2: the dual
/// pattern).
RepMatrices two_label_limit(int which, const Rat& a);

struct Example6Report {
  Rat a, b;
  bool relations_hold = false;         // generic module
  bool limit_relations_hold = false;   // all three limits
  bool m_irreducible = false;          // both isotypic t-spans full (a != b)
  ModuleFingerprint m, m0, m1, m2;
  bool m0_decomposable = false;
  bool m1_matches_amended = false;     // against rep_matrices of the quotient
  bool m2_dual_pattern = false;        // 1-dim sign-twisted socle
  bool limits_distinct = false;

  bool ok(bool require_distinct_labels) const {
    bool base = relations_hold && limit_relations_hold && m0_decomposable &&
                m1_matches_amended && m2_dual_pattern && limits_distinct;
    return require_distinct_labels ? base && m_irreducible : base;
  }
};

/// Requires nonzero a, b.
Example6Report run_example6(const Rat& a, const Rat& b);

}  // namespace tgp
