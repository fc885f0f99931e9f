#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgp/character.hpp"
#include "tgp/groebner.hpp"

namespace tgp {

/// Evaluation parameters: one rational column label per column of lambda.
struct EvalParams {
  std::vector<Rat> values;

  static EvalParams zeros(int n) { return EvalParams{std::vector<Rat>(n, Rat(0))}; }
  static EvalParams parse(const std::string& s);  // "1,1/2,-3"

  int size() const { return static_cast<int>(values.size()); }
  bool all_zero() const;
  bool any_zero() const;
  bool all_distinct() const;
  std::string str() const { return rat_vec_str(values); }
  bool operator==(const EvalParams& o) const { return values == o.values; }
};

/// The derived sequence a^(n): labels of the boxes in rows n+1..l(lambda),
/// read left to right and top to bottom; its length is m_lambda(lam, n).
std::vector<Rat> derived_params(const Partition& lam, const EvalParams& a, int n);

/// One generator together with its stratum metadata: the polynomial is
/// sum_{k=0}^{r} (-1)^k e_{r-k}(t_J) h_k(a^(n)) (undeformed when a = 0).
struct TanisakiEntry {
  int n = 0;
  std::vector<int> J;
  int r = 0;
  MPoly poly;
};

struct TanisakiSet {
  Partition lam;
  std::optional<EvalParams> params;  // nullopt for the undeformed set
  std::vector<TanisakiEntry> entries;

  std::vector<MPoly> polys() const;
};

/// Undeformed generators: e_r(t_J) for #J = d-n, 0 <= n < l(lambda),
/// d-n-m_lambda(n) < r <= d-n. Requires lambda nonempty.
TanisakiSet tanisaki_generators(const Partition& lam);

/// Deformed generators; with all-zero parameters this coincides with
/// tanisaki_generators. Requires #a = lambda_1.
TanisakiSet deformed_generators(const Partition& lam, const EvalParams& a);

/// The sub-family generating the same ideal: per stratum only
/// r <= d-n-m_lambda(n) + lambda_{n+1}.
TanisakiSet reduced_generators(const Partition& lam, const EvalParams& a);

/// d! / prod (lambda^t_i)! — the dimension every deformed quotient must hit.
long long d_lambda(const Partition& lam);

/// Quotient algebra Q[t_1..t_d]/<C_lambda^a> presented by a degrevlex
/// Groebner basis and its standard monomial basis. Immutable after
/// construction; concurrent read-only use is safe.
struct TGPAlgebra {
  Partition lam;
  EvalParams params;
  bool graded = false;  // true iff all parameters are zero
  GroebnerBasis gb;
  std::vector<Monomial> basis;  // ascending in the basis order

  long long dim() const { return static_cast<long long>(basis.size()); }
  int nvars() const { return gb.nvars; }
};

TGPAlgebra build_quotient(const Partition& lam, const EvalParams& a);

/// Trace of the permutation action per conjugacy class, split by the
/// degree of the basis monomial carrying the diagonal entry.
std::map<Partition, std::map<int, Rat>> degree_traces(const TGPAlgebra& R);

/// Total S_d-character of the quotient.
CharacterVector algebra_character(const TGPAlgebra& R);

/// Per-degree characters of a graded quotient; throws precondition_error
/// on a deformed (non-graded) algebra.
std::map<int, CharacterVector> graded_character(const TGPAlgebra& R);

/// The Kostka-side prediction {i -> {mu -> [q^i] K~_{mu,lambda^t}}}.
std::map<int, CharacterVector> kostka_graded_prediction(const Partition& lam);

/// Generator matrices of the extended affine action on the quotient, row
/// convention: row i of M[x] holds the coordinates of basis[i]*x, so
/// group words multiply left to right.
struct RepMatrices {
  int d = 0;
  bool amended = false;
  std::vector<RatMat> sigma;  // sigma_1..sigma_{d-1}
  std::vector<RatMat> t;      // t_1..t_d

  RatMat of_permutation(const Permutation& p) const;
};

/// Multiplication and permutation matrices on the standard basis; the
/// amended module multiplies each sigma_i by the sign -1. Amended use
/// requires all parameters nonzero (the t operators must be invertible).
RepMatrices rep_matrices(const TGPAlgebra& R, bool amended);

/// Exact matrix check of all defining relations of the extended affine
/// symmetric group.
bool verify_affine_relations(const RepMatrices& M);

/// Points with coordinate value a_i occurring exactly (lambda^t)_i times,
/// in deterministic enumeration order. Requires pairwise distinct values.
std::vector<std::vector<Rat>> variety_points(const Partition& lam,
                                             const EvalParams& a);

/// Brute-force flatness oracle at distinct parameters: counts the variety
/// points, checking that each annihilates every deformed generator
/// (integrity_error otherwise). The count equals d_lambda.
long long point_variety_oracle(const Partition& lam, const EvalParams& a);

/// True iff every deformed generator evaluates to zero on every variety
/// point (the concrete basis of M_a(lambda), where t_k acts by the point
/// coordinate).
bool annihilation_check(const Partition& lam, const EvalParams& a);

struct FlatReport {
  Partition lam;
  EvalParams params;
  long long dim = 0;
  long long d_lam = 0;
  bool dim_match = false;
  bool char_match = false;
  CharacterVector character;

  bool ok() const { return dim_match && char_match; }
};

/// Builds the quotient and compares dimension and character against the
/// multinomial and Young's rule.
FlatReport flatness_check(const Partition& lam, const EvalParams& a);

/// True iff the image of <C_lambda^{b a + c}> under t_k -> b t_k + c
/// equals <C_lambda^a>, and every equal-column-length swap of parameters
/// leaves the ideal unchanged. Requires b != 0.
bool shift_scale_check(const Partition& lam, const EvalParams& a, const Rat& b,
                       const Rat& c);

/// Ideal equality after swapping parameters of columns i and j (1-based);
/// guaranteed by theorem only when the column lengths agree, reported
/// as-is otherwise.
bool column_swap_equal(const Partition& lam, const EvalParams& a, int i, int j);

struct SplitReport {
  Partition lam;
  EvalParams params;
  std::vector<std::pair<Rat, Partition>> blocks;  // (value, sub-partition)
  long long dim = 0;
  long long expected_dim = 0;
  bool dim_match = false;
  bool char_match = false;

  bool ok() const { return dim_match && char_match; }
};

/// Splits lambda by grouping equal parameters, then checks the induced
/// character identity and the dimension product formula.
SplitReport split_check(const Partition& lam, const EvalParams& b);

/// normal_form(e_i(t) - e_i(a^(0))) = 0 for i = 1..d.
bool symmev_check(const TGPAlgebra& R);

/// normal_form(prod_j (t_i - a^(0)_j)) = 0 for each variable t_i.
bool annihilator_poly_check(const TGPAlgebra& R);

/// For each stratum n and subset J, the product prod_{j in J}(x + t_j) is
/// divisible by prod_i (x + a^(n)_i) over the quotient, with polynomial
/// quotient of degree d - n - m_lambda(n).
bool series_truncation_check(const TGPAlgebra& R);

}  // namespace tgp
