#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch {

// Global seat budget plus optional per-firm bounds; absent per-firm bounds
// mean the unbudgeted problem.
struct BudgetSpec {
  int global = 0;
  std::optional<std::vector<int>> per_firm;

  static BudgetSpec unbudgeted(int global) { return {global, std::nullopt}; }
  static BudgetSpec budgeted(int global, std::vector<int> per_firm) {
    return {global, std::move(per_firm)};
  }
};

enum class PlanReason {
  None,
  MutuallyUnacceptablePair,
  UnsaturatedDistractingFirm,
  TooManyUnmatchedDistractingWorkers,
  UnmatchedDistractingWoman,
  BudgetExceeded,
  GroupBudgetExceeded,
  TargetBlocked,
  NoFeasibleCandidate,
};

std::string to_string(PlanReason reason);

struct PlanResult {
  bool feasible = false;
  std::vector<int> new_caps;             // set when feasible
  std::optional<Matching> certificate;   // stable under new_caps
  int seats_changed = 0;
  PlanReason reason = PlanReason::None;

  static PlanResult fail(PlanReason r) {
    PlanResult res;
    res.reason = r;
    return res;
  }
};

// One-to-one planner result: the men added or removed, plus a certificate
// on the full id space (absent men are simply unmatched in it).
struct MenPlanResult {
  bool feasible = false;
  std::vector<int> men;                  // sorted man ids
  std::optional<Matching> certificate;
  PlanReason reason = PlanReason::None;

  static MenPlanResult fail(PlanReason r) {
    MenPlanResult res;
    res.reason = r;
    return res;
  }
};

// Disjoint groups of men with per-group deletion budgets.
struct GroupPartition {
  std::vector<int> group_of;      // per man
  std::vector<int> group_budget;  // per group
};

// Everything the pair planner derives from forcing (w, f) together: the
// agents that could block the pairing, the instance truncated around them
// with the pair taken out, and which of them the worker-optimal matching
// of that instance leaves wanting.
struct TruncationContext {
  std::vector<WorkerId> distracting_workers;  // f prefers them to w
  std::vector<FirmId> distracting_firms;      // w prefers them to f
  Instance truncated;
  Matching wosm;
  std::vector<WorkerId> unmatched_distracting_workers;
  std::vector<FirmId> unsaturated_distracting_firms;
};

TruncationContext build_truncation_context(const Instance& inst, WorkerId w,
                                           FirmId f);

// Match the pair by adding seats under a global budget only. All needed
// seats go to the target firm; feasibility follows the truncated-instance
// test (no unsaturated distracting firm, few enough unmatched distracting
// workers).
PlanResult add_capacity_match_pair(const Instance& inst, WorkerId w, FirmId f,
                                   int budget);

// One-to-one: delete at most `budget` men so that (man, woman) is matched
// in some stable matching of the remainder.
MenPlanResult delete_men_match_pair(const Instance& one, FirmId man,
                                    WorkerId woman, int budget);

// Try each candidate man in order; first feasible answer wins.
MenPlanResult delete_men_multiple_pairs(const Instance& one,
                                        const std::vector<FirmId>& men,
                                        WorkerId woman, int budget);

// Match the pair by deleting seats under a global budget only, via the
// one-to-one reduction over the target firm's copies.
PlanResult delete_capacity_match_pair(const Instance& inst, WorkerId w,
                                      FirmId f, int budget);

// Exact search for the budgeted (per-firm bounded) match-pair problems.
// Candidates are scanned in lexicographically ascending seat-change order,
// so the answer is canonical. Exponential in the firm count by design.
PlanResult budgeted_add_match_pair_exact(const Instance& inst, WorkerId w,
                                         FirmId f, const BudgetSpec& budget);
PlanResult budgeted_delete_match_pair_exact(const Instance& inst, WorkerId w,
                                            FirmId f, const BudgetSpec& budget);

// One-to-one: add men from the addable pool until the target matching's
// restriction is stable. Requires complete preferences. Each addition is
// forced, so the result uses the fewest possible men.
MenPlanResult add_men_stabilize(const Instance& one,
                                const std::vector<bool>& addable, int budget,
                                const Matching& mu_star);

// One-to-one: repeatedly delete every man involved in a blocking pair of
// the target matching's restriction; every deletion is necessary.
MenPlanResult delete_men_stabilize(const Instance& one,
                                   const GroupPartition& part, int budget,
                                   const Matching& mu_star);

// Stabilize a subset of the target matching by adding seats (complete
// preferences required; per-firm budgets honored when present).
PlanResult add_capacity_stabilize(const Instance& inst,
                                  const BudgetSpec& budget,
                                  const Matching& mu_star);

// Stabilize a subset of the target matching by deleting seats.
PlanResult delete_capacity_stabilize(const Instance& inst,
                                     const BudgetSpec& budget,
                                     const Matching& mu_star);

// Zero-budget check: is the pair matched in some stable matching as-is?
bool is_stable_pair(const Instance& inst, WorkerId w, FirmId f);

}  // namespace capmatch
