#include "tgp/tanisaki.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tgp {

EvalParams EvalParams::parse(const std::string& s) {
  EvalParams p;
  if (s.empty()) return p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.values.push_back(rat_parse(tok));
  return p;
}

bool EvalParams::all_zero() const {
  for (const Rat& v : values)
    if (v != 0) return false;
  return true;
}

bool EvalParams::any_zero() const {
  for (const Rat& v : values)
    if (v == 0) return true;
  return false;
}

bool EvalParams::all_distinct() const {
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) return false;
  return true;
}

std::vector<Rat> derived_params(const Partition& lam, const EvalParams& a, int n) {
  if (a.size() != lam.part(1))
    throw precondition_error("parameter count must equal lambda_1");
  if (n < 0 || n >= lam.length())
    throw precondition_error("stratum index out of range");
  std::vector<Rat> out;
  for (int row = n + 1; row <= lam.length(); ++row)
    for (int col = 1; col <= lam.part(row); ++col) out.push_back(a.values[col - 1]);
  return out;
}

std::vector<MPoly> TanisakiSet::polys() const {
  std::vector<MPoly> v;
  v.reserve(entries.size());
  for (const TanisakiEntry& e : entries) v.push_back(e.poly);
  return v;
}

namespace {

/// Subsets of {1..d} of the given size in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int v = next; v + need - 1 <= d; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// sum_{k=0}^{r} (-1)^k e_{r-k}(t_J) h_k(params).
MPoly deformed_entry_poly(const std::vector<int>& J, int r,
                          const std::vector<Rat>& params, int d) {
  MPoly p = MPoly::zero(d);
  for (int k = 0; k <= r; ++k) {
    Rat h = complete_homogeneous_eval(params, k);
    if (h == 0) continue;
    if (k % 2) h = -h;
    p += elementary_symmetric(J, r - k, d) * h;
  }
  return p;
}

TanisakiSet generators_impl(const Partition& lam, const EvalParams& a,
                            bool deformed, bool reduced) {
  if (lam.empty()) throw precondition_error("lambda must be nonempty");
  int d = lam.size();
  if (d > kMaxVars)
    throw precondition_error("|lambda| exceeds the supported ring size");
  if (a.size() != lam.part(1))
    throw precondition_error("parameter count must equal lambda_1");
  TanisakiSet set;
  set.lam = lam;
  if (deformed) set.params = a;
  for (int n = 0; n < lam.length(); ++n) {
    int m = m_lambda(lam, n);
    std::vector<Rat> an = derived_params(lam, a, n);
    int r_lo = d - n - m;  // exclusive
    int r_hi = reduced ? std::min(d - n, r_lo + lam.part(n + 1)) : d - n;
    for (const std::vector<int>& J : subsets_of_size(d, d - n)) {
      for (int r = r_lo + 1; r <= r_hi; ++r) {
        TanisakiEntry e;
        e.n = n;
        e.J = J;
        e.r = r;
        e.poly = deformed_entry_poly(J, r, an, d);
        set.entries.push_back(std::move(e));
      }
    }
  }
  return set;
}

}  // namespace

TanisakiSet tanisaki_generators(const Partition& lam) {
  return generators_impl(lam, EvalParams::zeros(lam.part(1)), false, false);
}

TanisakiSet deformed_generators(const Partition& lam, const EvalParams& a) {
  return generators_impl(lam, a, true, false);
}

TanisakiSet reduced_generators(const Partition& lam, const EvalParams& a) {
  return generators_impl(lam, a, true, true);
}

long long d_lambda(const Partition& lam) {
  long long v = factorial(lam.size());
  for (int p : transpose(lam).parts()) v /= factorial(p);
  return v;
}

TGPAlgebra build_quotient(const Partition& lam, const EvalParams& a) {
  TGPAlgebra R;
  R.lam = lam;
  R.params = a;
  R.graded = a.all_zero();
  TanisakiSet gens = deformed_generators(lam, a);
  // degrevlex is required downstream: graded characters need a graded order.
  R.gb = buchberger(gens.polys(), MonomialOrder::degrevlex, lam.size());
  R.basis = quotient_basis(R.gb);
  return R;
}

std::map<Partition, std::map<int, Rat>> degree_traces(const TGPAlgebra& R) {
  std::map<Partition, std::map<int, Rat>> out;
  for (const Partition& cls : partitions_of(R.lam.size())) {
    Permutation sigma = class_representative(cls);
    std::map<int, Rat> tr;
    for (const Monomial& b : R.basis) {
      MPoly image = normal_form(MPoly::monomial(b).apply_permutation(sigma), R.gb);
      Rat diag = image.coeff(b);
      if (diag != 0) tr[b.deg] += diag;
    }
    out.emplace(cls, std::move(tr));
  }
  return out;
}

CharacterVector algebra_character(const TGPAlgebra& R) {
  auto traces = degree_traces(R);
  ClassFunction phi;
  phi.d = R.lam.size();
  for (const auto& [cls, tr] : traces) {
    Rat total(0);
    for (const auto& [deg, v] : tr) total += v;
    phi.values[cls] = total;
  }
  return decompose(phi);
}

std::map<int, CharacterVector> graded_character(const TGPAlgebra& R) {
  if (!R.graded)
    throw precondition_error("graded_character requires all-zero parameters");
  auto traces = degree_traces(R);
  std::set<int> degrees;
  for (const Monomial& b : R.basis) degrees.insert(b.deg);
  std::map<int, CharacterVector> out;
  for (int deg : degrees) {
    ClassFunction phi;
    phi.d = R.lam.size();
    for (const auto& [cls, tr] : traces) {
      auto it = tr.find(deg);
      phi.values[cls] = it == tr.end() ? Rat(0) : it->second;
    }
    CharacterVector v = decompose(phi);
    if (!v.mult.empty()) out.emplace(deg, std::move(v));
  }
  return out;
}

std::map<int, CharacterVector> kostka_graded_prediction(const Partition& lam) {
  std::map<int, CharacterVector> out;
  Partition lt = transpose(lam);
  for (const Partition& mu : partitions_of(lam.size())) {
    QPoly kq = modified_kostka(mu, lt);
    for (int i = 0; i <= kq.degree(); ++i) {
      if (kq.at(i) == 0) continue;
      auto& cv = out[i];
      cv.d = lam.size();
      cv.add(mu, kq.at(i));
    }
  }
  return out;
}

RatMat RepMatrices::of_permutation(const Permutation& p) const {
  int n = t.empty() ? (sigma.empty() ? 0 : sigma[0].rows()) : t[0].rows();
  RatMat M = RatMat::identity(n);
  for (int i : p.adjacent_word()) M = M * sigma[i - 1];
  return M;
}

RepMatrices rep_matrices(const TGPAlgebra& R, bool amended) {
  if (amended && R.params.any_zero())
    throw precondition_error(
        "amended module requires nonzero parameters (t operators must be invertible)");
  int d = R.lam.size();
  int n = static_cast<int>(R.basis.size());
  RepMatrices M;
  M.d = d;
  M.amended = amended;
  for (int i = 1; i < d; ++i) {
    Permutation s = Permutation::transposition(d, i);
    RatMat mat(n, n);
    for (int row = 0; row < n; ++row) {
      std::vector<Rat> coords = quotient_coordinates(
          MPoly::monomial(R.basis[row]).apply_permutation(s), R.gb, R.basis);
      for (int col = 0; col < n; ++col) mat.at(row, col) = coords[col];
    }
    if (amended) mat = mat * Rat(-1);
    M.sigma.push_back(std::move(mat));
  }
  for (int i = 1; i <= d; ++i) {
    // multiplication_matrix is column-convention; transpose into rows.
    M.t.push_back(
        multiplication_matrix(MPoly::variable(d, i), R.gb, R.basis).transpose());
  }
  return M;
}

bool verify_affine_relations(const RepMatrices& M) {
  int d = M.d;
  int n = M.t.empty() ? 0 : M.t[0].rows();
  RatMat I = RatMat::identity(n);
  for (int i = 0; i + 1 < d; ++i) {
    if (M.sigma[i] * M.sigma[i] != I) return false;
    if (i + 2 < d) {
      if (M.sigma[i] * M.sigma[i + 1] * M.sigma[i] !=
          M.sigma[i + 1] * M.sigma[i] * M.sigma[i + 1])
        return false;
    }
    for (int j = i + 2; j + 1 < d; ++j)
      if (M.sigma[i] * M.sigma[j] != M.sigma[j] * M.sigma[i]) return false;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (M.t[i] * M.t[j] != M.t[j] * M.t[i]) return false;
  for (int i = 0; i + 1 < d; ++i) {
    // sigma_i t_i = t_{i+1} sigma_i
    if (M.sigma[i] * M.t[i] != M.t[i + 1] * M.sigma[i]) return false;
    for (int j = 0; j < d; ++j) {
      if (j == i || j == i + 1) continue;
      if (M.t[j] * M.sigma[i] != M.sigma[i] * M.t[j]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Rat>> variety_points(const Partition& lam,
                                             const EvalParams& a) {
  if (a.size() != lam.part(1))
    throw precondition_error("parameter count must equal lambda_1");
  if (!a.all_distinct())
    throw precondition_error("variety enumeration requires distinct parameters");
  int d = lam.size();
  Partition lt = transpose(lam);
  std::vector<int> remaining(lt.length());
  for (int i = 0; i < lt.length(); ++i) remaining[i] = lt.part(i + 1);
  std::vector<std::vector<Rat>> points;
  std::vector<Rat> cur(d);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      points.push_back(cur);
      return;
    }
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      cur[pos] = a.values[i];
      self(self, pos + 1);
      ++remaining[i];
    }
  };
  rec(rec, 0);
  return points;
}

bool annihilation_check(const Partition& lam, const EvalParams& a) {
  std::vector<std::vector<Rat>> points = variety_points(lam, a);
  TanisakiSet gens = deformed_generators(lam, a);
  for (const TanisakiEntry& e : gens.entries)
    for (const auto& pt : points)
      if (e.poly.evaluate(pt) != 0) return false;
  return true;
}

long long point_variety_oracle(const Partition& lam, const EvalParams& a) {
  if (!annihilation_check(lam, a))
    throw integrity_error("a variety point fails to annihilate a generator");
  return static_cast<long long>(variety_points(lam, a).size());
}

FlatReport flatness_check(const Partition& lam, const EvalParams& a) {
  FlatReport rep;
  rep.lam = lam;
  rep.params = a;
  TGPAlgebra R = build_quotient(lam, a);
  rep.dim = R.dim();
  rep.d_lam = d_lambda(lam);
  rep.dim_match = rep.dim == rep.d_lam;
  rep.character = algebra_character(R);
  rep.char_match = rep.character == young_rule_character(transpose(lam));
  return rep;
}

bool shift_scale_check(const Partition& lam, const EvalParams& a, const Rat& b,
                       const Rat& c) {
  if (b == 0) throw precondition_error("shift_scale_check requires b != 0");
  EvalParams shifted;
  for (const Rat& v : a.values) shifted.values.push_back(b * v + c);
  std::vector<MPoly> image;
  for (const MPoly& g : deformed_generators(lam, shifted).polys())
    image.push_back(g.shift_scale(b, c));
  std::vector<MPoly> target = deformed_generators(lam, a).polys();
  if (!ideal_equal(image, target, MonomialOrder::degrevlex, lam.size()))
    return false;
  Partition lt = transpose(lam);
  for (int i = 1; i <= lam.part(1); ++i)
    for (int j = i + 1; j <= lam.part(1); ++j)
      if (lt.part(i) == lt.part(j) && !column_swap_equal(lam, a, i, j))
        return false;
  return true;
}

bool column_swap_equal(const Partition& lam, const EvalParams& a, int i, int j) {
  if (i < 1 || j < 1 || i > a.size() || j > a.size())
    throw precondition_error("column index out of range");
  EvalParams swapped = a;
  std::swap(swapped.values[i - 1], swapped.values[j - 1]);
  return ideal_equal(deformed_generators(lam, swapped).polys(),
                     deformed_generators(lam, a).polys(),
                     MonomialOrder::degrevlex, lam.size());
}

SplitReport split_check(const Partition& lam, const EvalParams& b) {
  if (b.size() != lam.part(1))
    throw precondition_error("parameter count must equal lambda_1");
  SplitReport rep;
  rep.lam = lam;
  rep.params = b;

  // Group columns by parameter value, in order of first occurrence.
  Partition lt = transpose(lam);
  std::vector<Rat> seen;
  std::vector<std::vector<int>> heights;  // column heights per block
  for (int col = 1; col <= lam.part(1); ++col) {
    const Rat& v = b.values[col - 1];
    size_t k = 0;
    while (k < seen.size() && seen[k] != v) ++k;
    if (k == seen.size()) {
      seen.push_back(v);
      heights.push_back({});
    }
    heights[k].push_back(lt.part(col));
  }
  for (size_t k = 0; k < seen.size(); ++k) {
    std::sort(heights[k].rbegin(), heights[k].rend());
    rep.blocks.push_back({seen[k], transpose(Partition(heights[k]))});
  }

  TGPAlgebra R = build_quotient(lam, b);
  rep.dim = R.dim();
  CharacterVector total = algebra_character(R);

  CharacterVector induced;
  long long prod_dims = 1;
  long long multinomial = factorial(lam.size());
  for (size_t k = 0; k < rep.blocks.size(); ++k) {
    const Partition& blk = rep.blocks[k].second;
    EvalParams ak{std::vector<Rat>(blk.part(1), rep.blocks[k].first)};
    TGPAlgebra Rk = build_quotient(blk, ak);
    prod_dims *= Rk.dim();
    multinomial /= factorial(blk.size());
    CharacterVector ck = algebra_character(Rk);
    induced = (k == 0) ? ck : induced_character(induced, ck);
  }
  rep.expected_dim = multinomial * prod_dims;
  rep.dim_match = rep.dim == rep.expected_dim;
  rep.char_match = total == induced;
  return rep;
}

namespace {

Rat elementary_symmetric_eval(const std::vector<Rat>& a, int r) {
  if (r == 0) return Rat(1);
  if (r > static_cast<int>(a.size())) return Rat(0);
  std::vector<Rat> e(r + 1, Rat(0));
  e[0] = 1;
  for (size_t i = 0; i < a.size(); ++i)
    for (int k = std::min<int>(r, static_cast<int>(i) + 1); k >= 1; --k)
      e[k] += a[i] * e[k - 1];
  return e[r];
}

}  // namespace

bool symmev_check(const TGPAlgebra& R) {
  int d = R.lam.size();
  std::vector<Rat> a0 = derived_params(R.lam, R.params, 0);
  std::vector<int> all(d);
  for (int i = 0; i < d; ++i) all[i] = i + 1;
  for (int i = 1; i <= d; ++i) {
    MPoly f = elementary_symmetric(all, i, d) -
              MPoly::constant(d, elementary_symmetric_eval(a0, i));
    if (!normal_form(f, R.gb).is_zero()) return false;
  }
  return true;
}

bool annihilator_poly_check(const TGPAlgebra& R) {
  int d = R.lam.size();
  std::vector<Rat> a0 = derived_params(R.lam, R.params, 0);
  for (int i = 1; i <= d; ++i) {
    MPoly prod = MPoly::one(d);
    for (const Rat& aj : a0)
      prod = prod * (MPoly::variable(d, i) - MPoly::constant(d, aj));
    if (!normal_form(prod, R.gb).is_zero()) return false;
  }
  return true;
}

bool series_truncation_check(const TGPAlgebra& R) {
  int d = R.lam.size();
  for (int n = 0; n < R.lam.length(); ++n) {
    int m = m_lambda(R.lam, n);
    std::vector<Rat> an = derived_params(R.lam, R.params, n);
    // Denominator prod_i (x + a_i): rational coefficients by x-degree.
    std::vector<Rat> den(m + 1, Rat(0));
    for (int k = 0; k <= m; ++k) den[m - k] = elementary_symmetric_eval(an, k);
    int jd = d - n;
    for (const std::vector<int>& J : subsets_of_size(d, jd)) {
      // Numerator prod_{j in J} (x + t_j): coefficient of x^{|J|-k} is e_k(t_J).
      std::vector<MPoly> num(jd + 1, MPoly::zero(d));
      for (int k = 0; k <= jd; ++k) num[jd - k] = elementary_symmetric(J, k, d);
      // Long division by the monic denominator; division is exact in the
      // polynomial ring, only the remainder is tested against the ideal.
      for (int k = jd; k >= m; --k) {
        MPoly q = num[k];
        if (q.is_zero()) continue;
        for (int l = 0; l <= m; ++l) num[k - m + l] -= q * den[l];
      }
      for (int k = 0; k < m; ++k)
        if (!normal_form(num[k], R.gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace tgp
