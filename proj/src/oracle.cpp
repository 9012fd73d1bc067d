#include "capmatch/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

namespace capmatch::oracle {

OracleLimits OracleLimits::from_env() {
  OracleLimits limits;
  const char* raw = std::getenv("CAPMATCH_ORACLE_LIMITS");
  if (!raw) return limits;
  int w = 0, c = 0, b = 0;
  if (std::sscanf(raw, "%d,%d,%d", &w, &c, &b) != 3 || w <= 0 || c <= 0 ||
      b <= 0)
    throw Error("CAPMATCH_ORACLE_LIMITS must be \"workers,cap,budget\"");
  limits.max_workers = w;
  limits.max_total_capacity = c;
  limits.max_budget = b;
  return limits;
}

namespace {

void check_instance_limits(const Instance& inst, const OracleLimits& limits) {
  if (inst.n_workers > limits.max_workers)
    throw LimitExceededError("oracle: too many workers");
  if (inst.total_capacity() > limits.max_total_capacity)
    throw LimitExceededError("oracle: total capacity too large");
}

// Assign each worker a mutually acceptable firm or nothing, prune on
// capacities, and keep the stable leaves.
struct Enumerator {
  const Instance& inst;
  std::vector<int> counts;
  std::vector<int> assign;  // worker -> firm or -1
  std::vector<Matching> out;

  explicit Enumerator(const Instance& inst)
      : inst(inst), counts(inst.n_firms, 0), assign(inst.n_workers, -1) {}

  bool stable_leaf() const {
    // Firm-side view: worst held rank per firm.
    std::vector<int> worst(inst.n_firms, -1);
    for (WorkerId w = 0; w < inst.n_workers; ++w) {
      int f = assign[w];
      if (f < 0) continue;
      worst[f] = std::max(worst[f], inst.firm_prefs[f].rank_of(w));
    }
    for (WorkerId w = 0; w < inst.n_workers; ++w) {
      for (FirmId f : inst.worker_prefs[w].ranked) {
        if (f == assign[w]) break;  // only firms w strictly prefers
        int rank = inst.firm_prefs[f].rank_of(w);
        if (rank < 0) continue;
        if (counts[f] < inst.capacities[f]) return false;
        if (counts[f] > 0 && rank < worst[f]) return false;
      }
    }
    return true;
  }

  void run(WorkerId w) {
    if (w == inst.n_workers) {
      if (!stable_leaf()) return;
      Matching mu(inst.n_firms, inst.n_workers);
      for (WorkerId i = 0; i < inst.n_workers; ++i)
        if (assign[i] >= 0) mu.assign(i, assign[i]);
      out.push_back(std::move(mu));
      return;
    }
    assign[w] = -1;
    run(w + 1);
    for (FirmId f : inst.worker_prefs[w].ranked) {
      if (!inst.firm_prefs[f].accepts(w)) continue;
      if (counts[f] >= inst.capacities[f]) continue;
      assign[w] = f;
      ++counts[f];
      run(w + 1);
      --counts[f];
    }
    assign[w] = -1;
  }
};

}  // namespace

std::vector<Matching> enumerate_stable_matchings(const Instance& inst,
                                                 const OracleLimits& limits) {
  check_instance_limits(inst, limits);
  Enumerator en(inst);
  en.run(0);
  std::sort(en.out.begin(), en.out.end(),
            [](const Matching& a, const Matching& b) {
              return a.assignment() < b.assignment();
            });
  return en.out;
}

namespace {

bool subset_of(const Matching& mu, const Matching& target) {
  for (WorkerId w = 0; w < mu.n_workers(); ++w)
    if (mu.matched(w) && mu.firm_of(w) != target.firm_of(w)) return false;
  return true;
}

std::optional<Matching> objective_witness(const Instance& inst,
                                          const PlanObjective& obj,
                                          const OracleLimits& limits) {
  for (const Matching& mu : enumerate_stable_matchings(inst, limits)) {
    if (obj.is_pair ? mu.firm_of(obj.w) == obj.f : subset_of(mu, *obj.target))
      return mu;
  }
  return std::nullopt;
}

}  // namespace

PlanResult brute_force_plan(const Instance& inst, const PlanObjective& obj,
                            PlanAction action, const BudgetSpec& budget,
                            const OracleLimits& limits) {
  check_instance_limits(inst, limits);
  if (budget.global > limits.max_budget)
    throw LimitExceededError("oracle: budget too large");

  const int n = inst.n_firms;
  std::vector<std::vector<int>> candidates;
  std::vector<int> delta(n, 0);
  auto bound = [&](FirmId f) {
    int b = budget.per_firm ? std::min((*budget.per_firm)[f], budget.global)
                            : budget.global;
    if (action == PlanAction::Delete) b = std::min(b, inst.capacities[f]);
    return b;
  };
  std::function<void(int, int)> gen = [&](FirmId f, int used) {
    if (f == n) {
      candidates.push_back(delta);
      return;
    }
    for (int d = 0; d <= std::min(bound(f), budget.global - used); ++d) {
      delta[f] = d;
      gen(f + 1, used + d);
    }
    delta[f] = 0;
  };
  gen(0, 0);

  auto l1 = [](const std::vector<int>& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
  };
  const bool favor_target = obj.is_pair && action == PlanAction::Add;
  std::sort(candidates.begin(), candidates.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int la = l1(a), lb = l1(b);
              if (la != lb) return la < lb;
              if (favor_target && a[obj.f] != b[obj.f])
                return a[obj.f] > b[obj.f];
              if (action == PlanAction::Add) return a > b;  // larger caps first
              return a < b;  // fewer deletions on low-index firms first
            });

  for (const std::vector<int>& d : candidates) {
    std::vector<int> caps = inst.capacities;
    for (FirmId f = 0; f < n; ++f)
      caps[f] += action == PlanAction::Add ? d[f] : -d[f];
    Instance probe = inst;
    probe.capacities = caps;
    std::optional<Matching> witness = objective_witness(probe, obj, limits);
    if (!witness) continue;
    PlanResult res;
    res.feasible = true;
    res.new_caps = std::move(caps);
    res.certificate = std::move(witness);
    res.seats_changed = l1(d);
    return res;
  }
  return PlanResult::fail(PlanReason::NoFeasibleCandidate);
}

int brute_force_peak(const Instance& inst, FirmId f,
                     const OracleLimits& limits) {
  int best = 0;
  for (int b = 0; b <= inst.n_workers; ++b) {
    Instance probe = inst.with_capacity(f, b);
    for (const Matching& mu : enumerate_stable_matchings(probe, limits))
      best = std::max(best, mu.size_of(f));
  }
  return best;
}

}  // namespace capmatch::oracle
