#include "tgp/battery.hpp"

#include <set>

namespace tgp {

Rat small_rational(SplitMix64& g) {
  long num = static_cast<long>(g.below(19)) - 9;  // -9..9
  long den = static_cast<long>(g.below(3)) + 1;   // 1..3
  return rat(num, den);
}

Rat small_nonzero_rational(SplitMix64& g) {
  for (;;) {
    Rat r = small_rational(g);
    if (r != 0) return r;
  }
}

uint64_t seed_for(const Partition& lam, uint64_t seed) {
  uint64_t h = seed ^ 0x517CC1B727220A95ull;
  for (int p : lam.parts()) {
    h ^= static_cast<uint64_t>(p) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::vector<Rat> distinct_values(SplitMix64& g, int k) {
  std::set<Rat> seen;
  std::vector<Rat> out;
  while (static_cast<int>(out.size()) < k) {
    Rat r = small_nonzero_rational(g);
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<EvalParams> parameter_battery(const Partition& lam, uint64_t seed,
                                          int count) {
  int w = lam.part(1);
  SplitMix64 g(seed_for(lam, seed));
  std::vector<EvalParams> out;
  // 1. all zero (the undeformed, graded algebra).
  out.push_back(EvalParams::zeros(w));
  // 2. all equal nonzero.
  {
    Rat v = small_nonzero_rational(g);
    out.push_back(EvalParams{std::vector<Rat>(w, v)});
  }
  // 3. all distinct nonzero.
  out.push_back(EvalParams{distinct_values(g, w)});
  // 4. mixed repetition: first two columns share a value when possible.
  if (w >= 3) {
    std::vector<Rat> v = distinct_values(g, w - 1);
    v.insert(v.begin(), v.front());
    out.push_back(EvalParams{v});
  } else {
    EvalParams p;
    for (int i = 0; i < w; ++i) p.values.push_back(small_nonzero_rational(g));
    out.push_back(p);
  }
  // 5+. random small rationals (repetitions arise naturally).
  while (static_cast<int>(out.size()) < count) {
    EvalParams p;
    for (int i = 0; i < w; ++i) p.values.push_back(small_rational(g));
    out.push_back(p);
  }
  return out;
}

std::vector<EvalParams> multiblock_battery(const Partition& lam, uint64_t seed,
                                           int count) {
  int w = lam.part(1);
  SplitMix64 g(seed_for(lam, seed ^ 0xD1B54A32D192ED03ull));
  std::vector<EvalParams> out;
  while (static_cast<int>(out.size()) < count) {
    EvalParams p;
    if (w >= 2) {
      // Two or three distinct values spread across the columns.
      int nvals = 2 + static_cast<int>(g.below(2));
      nvals = std::min(nvals, w);
      std::vector<Rat> vals = distinct_values(g, nvals);
      for (int i = 0; i < w; ++i)
        p.values.push_back(vals[g.below(static_cast<uint64_t>(nvals))]);
      std::set<Rat> used(p.values.begin(), p.values.end());
      if (used.size() < 2) {
        p.values[w - 1] = vals[0] == p.values[0] ? vals[1] : vals[0];
      }
    } else {
      p.values.push_back(small_nonzero_rational(g));
    }
    out.push_back(p);
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> shift_scale_pairs(uint64_t seed, int count) {
  SplitMix64 g(seed ^ 0x2545F4914F6CDD1Dull);
  std::vector<std::pair<Rat, Rat>> out;
  out.push_back({rat(2), rat(3)});
  out.push_back({rat(1), rat(-1)});
  out.push_back({rat(-1, 2), rat(5, 3)});
  while (static_cast<int>(out.size()) < count)
    out.push_back({small_nonzero_rational(g), small_rational(g)});
  return out;
}

}  // namespace tgp
