#include "tgp/example6.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tgp {

namespace {

/// Matrices are transcribed in the column convention (the image of the
/// j-th basis vector sits in column j) and transposed on exit to the row
/// convention RepMatrices uses.
RatMat col3(std::initializer_list<Rat> entries) {
  RatMat m(3, 3);
  auto it = entries.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = *it++;
  return m.transpose();
}

RepMatrices assemble(RatMat s1, RatMat s2, RatMat t1, RatMat t2, RatMat t3) {
  RepMatrices M;
  M.d = 3;
  M.sigma = {std::move(s1), std::move(s2)};
  M.t = {std::move(t1), std::move(t2), std::move(t3)};
  return M;
}

RepMatrices basis_alpha(const Rat& a, const Rat& b) {
  return assemble(col3({-1, 0, 0, 0, 0, -1, 0, -1, 0}),
                  col3({0, 1, 0, 1, 0, 0, 0, 0, -1}),
                  col3({a, 0, 0, 0, a, 0, 0, 0, b}),
                  col3({a, 0, 0, 0, b, 0, 0, 0, a}),
                  col3({b, 0, 0, 0, a, 0, 0, 0, a}));
}

RepMatrices basis_beta(const Rat& a, const Rat& b) {
  return assemble(
      col3({-1, 0, 0, 0, 0, -1, 0, -1, 0}),
      col3({-1, 0, -(2 * a + b), 0, -1, 1, 0, 0, 1}),
      col3({0, -a * b, -a * a, 1, a + b, a, 0, 0, a}),
      col3({0, -a * a, -a * b, 0, a, 0, 1, a, a + b}),
      col3({2 * a + b, a * a + a * b, a * a + a * b, -1, 0, -a, -1, -a, 0}));
}

RepMatrices basis_gamma(const Rat& a, const Rat& b) {
  return assemble(col3({0, 1, b, 1, 0, b, 0, 0, -1}),
                  col3({1, -1, a + b, 0, -1, 0, 0, 0, -1}),
                  col3({a, b, 0, 0, b, 0, 0, -1, a}),
                  col3({0, 0, -a * b, 0, a, 0, 1, 0, a + b}),
                  col3({a + b, -b, a * b, 0, a, 0, -1, 1, 0}));
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

std::string ModuleFingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " char=" << character.str() << " t_span={";
  bool first = true;
  for (const auto& [p, s] : t_span) {
    if (!first) os << ", ";
    first = false;
    os << "(" << p.str() << "): " << s;
  }
  os << "}";
  return os.str();
}

ModuleFingerprint fingerprint(const RepMatrices& M) {
  int d = M.d;
  if (d > 5) throw precondition_error("fingerprint enumerates S_d; d <= 5 only");
  int n = M.t.empty() ? 0 : M.t[0].rows();
  ModuleFingerprint fp;
  fp.dim = n;

  const CharacterTable& T = CharacterTable::get(d);
  ClassFunction phi;
  phi.d = d;
  for (const Partition& cls : partitions_of(d))
    phi.values[cls] = M.of_permutation(class_representative(cls)).trace();
  fp.character = decompose(phi);

  std::vector<Permutation> group = all_permutations(d);
  long long order = factorial(d);
  for (const auto& [mu, mult] : fp.character.mult) {
    (void)mult;
    // Central idempotent (dim/|G|) sum chi_mu(g) g; its row space is the
    // isotypic component.
    RatMat P(n, n);
    for (const Permutation& g : group)
      P = P + M.of_permutation(g) * rat_ll(T.value(mu, g.cycle_type()));
    P = P * (rat_ll(hook_dimension(mu)) / rat_ll(order));
    RowSpace span(n);
    for (int i = 0; i < n; ++i) span.insert(P.row(i));
    // Close under the t-action.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Rat>> rows = span.rows();
      for (const auto& r : rows)
        for (const RatMat& t : M.t)
          if (span.insert(t.apply_row(r))) grew = true;
    }
    fp.t_span[mu] = span.dim();
  }
  return fp;
}

RepMatrices two_label_module(const Rat& a, const Rat& b) {
  return basis_alpha(a, b);
}

RepMatrices two_label_limit(int which, const Rat& a) {
  switch (which) {
    case 0: return basis_alpha(a, a);
    case 1: return basis_beta(a, a);
    case 2: return basis_gamma(a, a);
    default: throw precondition_error("limit index must be 0, 1 or 2");
  }
}

Example6Report run_example6(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw precondition_error("labels must be nonzero");
  Example6Report rep;
  rep.a = a;
  rep.b = b;

  RepMatrices M = two_label_module(a, b);
  rep.relations_hold = verify_affine_relations(M);
  rep.m = fingerprint(M);

  RepMatrices M0 = two_label_limit(0, a);
  RepMatrices M1 = two_label_limit(1, a);
  RepMatrices M2 = two_label_limit(2, a);
  rep.limit_relations_hold = verify_affine_relations(M0) &&
                             verify_affine_relations(M1) &&
                             verify_affine_relations(M2);
  rep.m0 = fingerprint(M0);
  rep.m1 = fingerprint(M1);
  rep.m2 = fingerprint(M2);

  Partition sgn{1, 1, 1};
  Partition std_rep{2, 1};
  auto span_of = [](const ModuleFingerprint& fp, const Partition& p) {
    auto it = fp.t_span.find(p);
    return it == fp.t_span.end() ? -1LL : it->second;
  };
  rep.m_irreducible =
      span_of(rep.m, sgn) == 3 && span_of(rep.m, std_rep) == 3;
  rep.m0_decomposable =
      span_of(rep.m0, sgn) == 1 && span_of(rep.m0, std_rep) == 2;
  rep.m2_dual_pattern =
      span_of(rep.m2, sgn) == 1 && span_of(rep.m2, std_rep) == 3;
  rep.limits_distinct =
      !(rep.m0 == rep.m1) && !(rep.m0 == rep.m2) && !(rep.m1 == rep.m2);

  TGPAlgebra R = build_quotient(Partition{2, 1}, EvalParams{{a, a}});
  rep.m1_matches_amended = rep.m1 == fingerprint(rep_matrices(R, true));
  return rep;
}

}  // namespace tgp
