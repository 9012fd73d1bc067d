#pragma once

#include <optional>
#include <vector>

#include "capmatch/capmod.hpp"
#include "capmatch/core.hpp"

namespace capmatch::oracle {

// Hard caps on the exhaustive searches. Enforced, not advisory.
struct OracleLimits {
  int max_workers = 8;
  int max_total_capacity = 10;
  int max_budget = 4;

  // Reads CAPMATCH_ORACLE_LIMITS ("workers,cap,budget") when set.
  static OracleLimits from_env();
};

// Every stable matching of the instance, in a canonical order (sorted by
// the worker->firm assignment vector).
std::vector<Matching> enumerate_stable_matchings(
    const Instance& inst, const OracleLimits& limits = {});

enum class PlanAction { Add, Delete };

struct PlanObjective {
  bool is_pair = true;
  WorkerId w = -1;
  FirmId f = -1;
  std::optional<Matching> target;

  static PlanObjective pair(WorkerId w, FirmId f) {
    PlanObjective obj;
    obj.w = w;
    obj.f = f;
    return obj;
  }
  static PlanObjective stabilize(Matching mu) {
    PlanObjective obj;
    obj.is_pair = false;
    obj.target = std::move(mu);
    return obj;
  }
};

// Exhaustive planner: try every capacity vector within the budgets and test
// the objective against the full stable set. Candidates are ranked by
// fewest seats changed, then (for match-pair adds) most seats on the target
// firm, then lexicographically largest capacities, so the winning vector is
// canonical and matches the polynomial planners wherever those are pinned.
PlanResult brute_force_plan(const Instance& inst, const PlanObjective& obj,
                            PlanAction action, const BudgetSpec& budget,
                            const OracleLimits& limits = {});

// Largest stable match size for the firm over every choice of its capacity.
int brute_force_peak(const Instance& inst, FirmId f,
                     const OracleLimits& limits = {});

}  // namespace capmatch::oracle
