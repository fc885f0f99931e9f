#include "tgp/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tgp {

namespace {

/// Integer polynomial for the Buchberger inner loop: primitive content,
/// positive leading coefficient, terms sorted descending in the active
/// order. Rational S-polynomial arithmetic is the dominant cost, so the
/// pair queue works fraction-free.
struct IPoly {
  std::vector<Monomial> mono;
  std::vector<mpz_class> coef;

  bool is_zero() const { return mono.empty(); }
  const Monomial& lm() const { return mono.front(); }
  const mpz_class& lc() const { return coef.front(); }
};

struct Ctx {
  MonomialOrder ord;
  bool desc(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, ord) > 0;
  }
};

IPoly to_ipoly(const MPoly& f, const Ctx& ctx) {
  // Clear denominators, sort by the active order, strip content.
  mpz_class den = 1;
  for (const auto& t : f.terms()) den = lcm(den, t.second.get_den());
  std::vector<std::pair<Monomial, mpz_class>> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Rat c = t.second * den;
    terms.push_back({t.first, c.get_num()});
  }
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ctx.desc(a.first, b.first); });
  IPoly p;
  p.mono.reserve(terms.size());
  p.coef.reserve(terms.size());
  mpz_class content = 0;
  for (auto& t : terms) {
    p.mono.push_back(t.first);
    p.coef.push_back(std::move(t.second));
    content = gcd(content, p.coef.back());
  }
  if (content > 1)
    for (auto& c : p.coef) c /= content;
  if (!p.coef.empty() && p.coef.front() < 0)
    for (auto& c : p.coef) c = -c;
  return p;
}

MPoly to_mpoly_monic(const IPoly& p, int nvars) {
  std::vector<MPoly::Term> terms;
  terms.reserve(p.mono.size());
  Rat lead(p.coef.front());
  for (size_t i = 0; i < p.mono.size(); ++i)
    terms.push_back({p.mono[i], Rat(p.coef[i]) / lead});
  return MPoly(nvars, std::move(terms));
}

/// r = a*f - b*(m * g), terms merged in the active order.
IPoly combine(const IPoly& f, const mpz_class& a, const IPoly& g,
              const mpz_class& b, const Monomial& m, const Ctx& ctx) {
  IPoly r;
  r.mono.reserve(f.mono.size() + g.mono.size());
  r.coef.reserve(f.mono.size() + g.mono.size());
  size_t i = 0, j = 0;
  while (i < f.mono.size() || j < g.mono.size()) {
    int c;
    Monomial gm;
    if (j < g.mono.size()) gm = mono_mul(g.mono[j], m);
    if (i >= f.mono.size())
      c = -1;
    else if (j >= g.mono.size())
      c = 1;
    else
      c = mono_cmp(f.mono[i], gm, ctx.ord);
    if (c > 0) {
      r.mono.push_back(f.mono[i]);
      r.coef.push_back(a * f.coef[i]);
      ++i;
    } else if (c < 0) {
      r.mono.push_back(gm);
      r.coef.push_back(-b * g.coef[j]);
      ++j;
    } else {
      mpz_class v = a * f.coef[i] - b * g.coef[j];
      if (v != 0) {
        r.mono.push_back(f.mono[i]);
        r.coef.push_back(std::move(v));
      }
      ++i, ++j;
    }
  }
  return r;
}

void make_primitive(IPoly& p) {
  mpz_class content = 0;
  for (const auto& c : p.coef) {
    content = gcd(content, c);
    if (content == 1) break;
  }
  if (content > 1)
    for (auto& c : p.coef) c /= content;
  if (!p.coef.empty() && p.coef.front() < 0)
    for (auto& c : p.coef) c = -c;
}

/// Full fraction-free reduction of f against the list (first divisible
/// leading monomial wins; the list order is fixed by the caller, which
/// makes the result deterministic). Result is primitive.
IPoly reduce_full(IPoly f, const std::vector<IPoly>& basis,
                  const std::vector<int>& active, const Ctx& ctx) {
  IPoly out;
  while (!f.is_zero()) {
    bool reduced = false;
    for (int bi : active) {
      const IPoly& g = basis[bi];
      if (!divides(g.lm(), f.lm())) continue;
      Monomial q = mono_div(f.lm(), g.lm());
      mpz_class gamma = gcd(f.lc(), g.lc());
      mpz_class a = g.lc() / gamma;
      mpz_class b = f.lc() / gamma;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      if (a != 1 && !out.is_zero())
        for (auto& c : out.coef) c *= a;
      f = combine(f, a, g, b, q, ctx);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.mono.push_back(f.lm());
      out.coef.push_back(f.lc());
      f.mono.erase(f.mono.begin());
      f.coef.erase(f.coef.begin());
    }
  }
  make_primitive(out);
  return out;
}

IPoly spoly(const IPoly& f, const IPoly& g, const Ctx& ctx) {
  Monomial L = mono_lcm(f.lm(), g.lm());
  mpz_class gamma = gcd(f.lc(), g.lc());
  // (lc_g/gamma) * (L/lm_f) * f  -  (lc_f/gamma) * (L/lm_g) * g
  IPoly shifted_f;
  Monomial mf = mono_div(L, f.lm());
  shifted_f.mono.reserve(f.mono.size());
  for (const auto& m : f.mono) shifted_f.mono.push_back(mono_mul(m, mf));
  shifted_f.coef = f.coef;
  return combine(shifted_f, g.lc() / gamma, g, f.lc() / gamma,
                 mono_div(L, g.lm()), ctx);
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MPoly>& gens, MonomialOrder order,
                         int nvars) {
  Ctx ctx{order};
  for (const MPoly& g : gens)
    if (g.nvars() != nvars)
      throw precondition_error("generator ring dimension mismatch");

  // Deterministic start: keep input order, but pre-reduce each generator
  // against the ones already accepted to cut redundancy early.
  std::vector<IPoly> basis;
  std::vector<int> active;
  for (const MPoly& g : gens) {
    if (g.is_zero()) continue;
    IPoly r = reduce_full(to_ipoly(g, ctx), basis, active, ctx);
    if (!r.is_zero()) {
      basis.push_back(std::move(r));
      active.push_back(static_cast<int>(basis.size()) - 1);
    }
  }

  // Pending pairs keyed by (lcm, i, j): normal strategy, smallest lcm first.
  struct PairKey {
    Monomial lcm;
    int i, j;
  };
  auto heap_less = [order](const PairKey& a, const PairKey& b) {
    // std heap pops the max, so invert: the smallest lcm sits on top.
    int c = mono_cmp(a.lcm, b.lcm, order);
    if (c != 0) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::vector<PairKey> pending;
  std::set<std::pair<int, int>> handled;
  auto push_pair = [&](int i, int m) {
    pending.push_back({mono_lcm(basis[i].lm(), basis[m].lm()), std::min(i, m),
                       std::max(i, m)});
    std::push_heap(pending.begin(), pending.end(), heap_less);
  };
  for (size_t m = 0; m < basis.size(); ++m)
    for (size_t i = 0; i < m; ++i) push_pair(static_cast<int>(i), static_cast<int>(m));

  while (!pending.empty()) {
    std::pop_heap(pending.begin(), pending.end(), heap_less);
    PairKey pk = pending.back();
    pending.pop_back();
    if (handled.count({pk.i, pk.j})) continue;
    handled.insert({pk.i, pk.j});

    const IPoly& f = basis[pk.i];
    const IPoly& g = basis[pk.j];
    // Buchberger's first criterion: coprime leading monomials.
    if (coprime(f.lm(), g.lm())) continue;
    // Chain criterion: some k with lm_k | lcm(i,j) and both side pairs done.
    bool skip = false;
    for (int k : active) {
      if (k == pk.i || k == pk.j) continue;
      if (!divides(basis[k].lm(), pk.lcm)) continue;
      auto p1 = std::minmax(pk.i, k);
      auto p2 = std::minmax(pk.j, k);
      if (handled.count(p1) && handled.count(p2)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    IPoly s = spoly(f, g, ctx);
    IPoly r = reduce_full(std::move(s), basis, active, ctx);
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    int m = static_cast<int>(basis.size()) - 1;
    for (int i : active) push_pair(i, m);
    active.push_back(m);
  }

  // Interreduce: reduce every element against the others until stable.
  std::vector<IPoly> work;
  for (int i : active) work.push_back(basis[i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.size(); ++i) {
      std::vector<IPoly> others;
      std::vector<int> idx;
      for (size_t j = 0; j < work.size(); ++j)
        if (j != i && !work[j].is_zero()) {
          others.push_back(work[j]);
          idx.push_back(static_cast<int>(others.size()) - 1);
        }
      IPoly r = reduce_full(work[i], others, idx, ctx);
      if (!(r.mono == work[i].mono && r.coef == work[i].coef)) {
        work[i] = std::move(r);
        changed = true;
      }
    }
    work.erase(std::remove_if(work.begin(), work.end(),
                              [](const IPoly& p) { return p.is_zero(); }),
               work.end());
  }

  GroebnerBasis G;
  G.order = order;
  G.nvars = nvars;
  for (const IPoly& p : work) G.gens.push_back(to_mpoly_monic(p, nvars));
  std::sort(G.gens.begin(), G.gens.end(), [&](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.leading(order).first, b.leading(order).first, order) < 0;
  });
  return G;
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& G) {
  if (f.nvars() != G.nvars) throw precondition_error("ring dimension mismatch");
  MPoly p = f;
  MPoly out(G.nvars);
  while (!p.is_zero()) {
    const auto& [m, c] = p.leading(G.order);
    bool reduced = false;
    for (const MPoly& g : G.gens) {
      const Monomial& gm = g.leading(G.order).first;
      if (!divides(gm, m)) continue;
      p.add_scaled(-c, mono_div(m, gm), g);  // g is monic
      reduced = true;
      break;
    }
    if (!reduced) {
      MPoly t = MPoly::monomial(m, c);
      out += t;
      p -= t;
    }
  }
  return out;
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& G) {
  std::vector<Monomial> lms;
  for (const MPoly& g : G.gens) lms.push_back(g.leading(G.order).first);
  // Zero-dimensionality: every variable needs a pure power among the lms.
  std::vector<int> cap(G.nvars, -1);
  for (const Monomial& m : lms) {
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < G.nvars; ++i) {
      if (m.e[i]) {
        if (nz >= 0) {
          pure = false;
          break;
        }
        nz = i;
      }
    }
    if (m.is_one()) return {};  // unit ideal: empty quotient
    if (pure && nz >= 0)
      cap[nz] = cap[nz] < 0 ? m.e[nz] : std::min<int>(cap[nz], m.e[nz]);
  }
  for (int i = 0; i < G.nvars; ++i)
    if (cap[i] < 0)
      throw precondition_error("ideal is not zero-dimensional");

  std::vector<Monomial> out;
  Monomial cur = Monomial::one(G.nvars);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == G.nvars) {
      for (const Monomial& m : lms)
        if (divides(m, cur)) return;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < cap[var]; ++e) {
      cur.e[var] = static_cast<uint16_t>(e);
      cur.deg += e;
      self(self, var + 1);
      cur.deg -= e;
    }
    cur.e[var] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), MonoLess{G.order});
  return out;
}

bool ideal_equal(const std::vector<MPoly>& gens1, const std::vector<MPoly>& gens2,
                 MonomialOrder order, int nvars) {
  return buchberger(gens1, order, nvars) == buchberger(gens2, order, nvars);
}

std::vector<Rat> quotient_coordinates(const MPoly& f, const GroebnerBasis& G,
                                      const std::vector<Monomial>& B) {
  MPoly nf = normal_form(f, G);
  std::map<Monomial, int, MonoLess> index{MonoLess{G.order}};
  for (size_t j = 0; j < B.size(); ++j) index[B[j]] = static_cast<int>(j);
  std::vector<Rat> coords(B.size(), Rat(0));
  for (const auto& t : nf.terms()) {
    auto it = index.find(t.first);
    if (it == index.end())
      throw integrity_error("normal form left the standard monomial span");
    coords[it->second] = t.second;
  }
  return coords;
}

RatMat multiplication_matrix(const MPoly& f, const GroebnerBasis& G,
                             const std::vector<Monomial>& B) {
  int n = static_cast<int>(B.size());
  RatMat M(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> col =
        quotient_coordinates(MPoly::monomial(B[j]) * f, G, B);
    for (int i = 0; i < n; ++i) M.at(i, j) = col[i];
  }
  return M;
}

bool verify_groebner(const std::vector<MPoly>& original_gens,
                     const GroebnerBasis& G) {
  for (const MPoly& g : original_gens)
    if (!normal_form(g, G).is_zero()) return false;
  for (size_t i = 0; i < G.gens.size(); ++i)
    for (size_t j = i + 1; j < G.gens.size(); ++j) {
      const Monomial& mi = G.gens[i].leading(G.order).first;
      const Monomial& mj = G.gens[j].leading(G.order).first;
      Monomial L = mono_lcm(mi, mj);
      MPoly s = MPoly::monomial(mono_div(L, mi)) * G.gens[i] -
                MPoly::monomial(mono_div(L, mj)) * G.gens[j];
      if (!normal_form(s, G).is_zero()) return false;
    }
  return true;
}

}  // namespace tgp
