#include "tgp/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "tgp/battery.hpp"
#include "tgp/example6.hpp"
#include "tgp/schurweyl.hpp"

namespace tgp {

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& r : results) n += r.pass;
  return n;
}

int SuiteReport::failed() const {
  return static_cast<int>(results.size()) - passed();
}

int thread_budget() {
  if (const char* env = std::getenv("TGP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 4u));
}

namespace {

void run_tasks(std::vector<std::function<void()>>& tasks, int threads) {
  if (threads <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

/// One (lambda, params) work unit shares a single quotient build.
std::vector<CheckResult> check_unit(const Partition& lam, const EvalParams& a,
                                    bool with_shift_scale, uint64_t seed) {
  std::vector<CheckResult> out;
  std::string ls = lam.str(), ps = a.str();
  auto push = [&](const std::string& name, bool pass, const std::string& note = "") {
    out.push_back({name, ls, ps, pass, note});
  };
  try {
    TGPAlgebra R = build_quotient(lam, a);
    CharacterVector ch = algebra_character(R);

    bool flat = R.dim() == d_lambda(lam) &&
                ch == young_rule_character(transpose(lam));
    push("flat", flat);

    push("reduce", ideal_equal(deformed_generators(lam, a).polys(),
                               reduced_generators(lam, a).polys(),
                               MonomialOrder::degrevlex, lam.size()));

    push("symmev", symmev_check(R) && annihilator_poly_check(R));

    if (R.graded) {
      push("gchar", graded_character(R) == kostka_graded_prediction(lam));
    }

    if (a.all_distinct() && !a.any_zero()) {
      push("annihilation", annihilation_check(lam, a) &&
                               point_variety_oracle(lam, a) == d_lambda(lam));
    }

    int n = lam.size();
    push("dualweyl", schur_weyl_image(sign_twist(ch), n) ==
                         weyl_gmodule_decomposition(lam, n));

    if (with_shift_scale) {
      bool ok = true;
      for (const auto& [b, c] : shift_scale_pairs(seed, 3))
        ok = ok && shift_scale_check(lam, a, b, c);
      push("shiftscale", ok);
    }
  } catch (const std::exception& e) {
    push("unit", false, e.what());
  }
  return out;
}

std::vector<CheckResult> check_split(const Partition& lam, const EvalParams& b) {
  std::vector<CheckResult> out;
  try {
    SplitReport rep = split_check(lam, b);
    out.push_back({"split", lam.str(), b.str(), rep.ok(), ""});
  } catch (const std::exception& e) {
    out.push_back({"split", lam.str(), b.str(), false, e.what()});
  }
  return out;
}

}  // namespace

SuiteReport run_suite(int max_d, int trials, uint64_t seed, int threads) {
  if (max_d < 1 || max_d > 7)
    throw precondition_error("suite supports 1 <= max_d <= 7");
  if (trials < 1) throw precondition_error("trials must be >= 1");
  SuiteReport report;
  report.max_d = max_d;
  report.trials = trials;
  report.seed = seed;

  struct Slot {
    std::vector<CheckResult> results;
  };
  std::vector<Slot> slots;
  std::vector<std::function<void()>> tasks;

  for (int d = 1; d <= max_d; ++d) {
    for (const Partition& lam : partitions_of(d)) {
      std::vector<EvalParams> battery =
          parameter_battery(lam, seed, std::max(trials, 5));
      for (size_t i = 0; i < battery.size(); ++i) {
        slots.emplace_back();
        size_t slot = slots.size() - 1;
        EvalParams a = battery[i];
        bool shift = i == 1;  // one shift/scale battery per lambda
        tasks.push_back([&slots, slot, lam, a, shift, seed] {
          slots[slot].results = check_unit(lam, a, shift, seed);
        });
      }
      for (const EvalParams& b : multiblock_battery(lam, seed, std::max(trials, 3))) {
        slots.emplace_back();
        size_t slot = slots.size() - 1;
        tasks.push_back([&slots, slot, lam, b] {
          slots[slot].results = check_split(lam, b);
        });
      }
    }
  }
  if (max_d >= 3) {
    slots.emplace_back();
    size_t slot = slots.size() - 1;
    tasks.push_back([&slots, slot, seed] {
      SplitMix64 g(seed ^ 0xA0761D6478BD642Full);
      Rat a = small_nonzero_rational(g);
      Rat b = small_nonzero_rational(g);
      Example6Report rep = run_example6(a, b);
      slots[slot].results.push_back({"example6", "2,1",
                                     rat_str(a) + "," + rat_str(b),
                                     rep.ok(a != b), ""});
    });
  }

  run_tasks(tasks, threads);
  for (const Slot& s : slots)
    for (const CheckResult& r : s.results) report.results.push_back(r);
  return report;
}

}  // namespace tgp
