#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capmatch/core.hpp"
#include "capmatch/da.hpp"

namespace capmatch::analysis {

enum class Regime { BelowPeak, AtPeak, AbovePeak };

std::string to_string(Regime regime);

// The firm's peak: the largest stable match size over all choices of its
// own capacity. Computed with a single worker-proposing run at capacity
// n_workers, where the stable match set has frozen at its at-peak value.
struct PeakReport {
  FirmId firm = -1;
  int peak = 0;
  int capacity = 0;
  Regime regime = Regime::AtPeak;
  std::vector<WorkerId> at_peak_wosm_set;
};

PeakReport peak(const Instance& inst, FirmId f);

// A capacity misreport and the matched set it yields for the firm.
struct CapacityMove {
  int capacity = 0;
  std::vector<WorkerId> outcome;
};

// A preference misreport (a permutation of the acceptable list) and the
// matched set it yields, valued under the firm's true preferences.
struct PrefMove {
  std::vector<WorkerId> report;
  std::vector<WorkerId> outcome;
};

// Best strictly improving capacity increase, never searching past the peak.
std::optional<CapacityMove> best_add(const Instance& inst, FirmId f, Algo algo);

// Best strictly improving capacity decrease.
std::optional<CapacityMove> best_delete(const Instance& inst, FirmId f,
                                        Algo algo);

// Best strictly improving permutation misreport. Sweeps every permutation
// of the acceptable list, so the list length is capped by perm_limit.
std::optional<PrefMove> best_pref(const Instance& inst, FirmId f, Algo algo,
                                  int perm_limit = 8);

enum class Action { Add = 0, Delete = 1, Pref = 2 };

std::string to_string(Action action);

struct ManipulationReport {
  FirmId firm = -1;
  Algo algo = Algo::WPDA;
  PeakReport peak;
  std::vector<WorkerId> truthful;
  std::optional<CapacityMove> add;
  std::optional<CapacityMove> del;
  std::optional<PrefMove> pref;
  // beats[x][y]: the outcome of action x is strictly better for the firm
  // than the outcome of action y (an unused action keeps the truthful set).
  bool beats[3][3] = {};

  const std::vector<WorkerId>& outcome_of(Action a) const {
    switch (a) {
      case Action::Add:
        return add ? add->outcome : truthful;
      case Action::Delete:
        return del ? del->outcome : truthful;
      default:
        return pref ? pref->outcome : truthful;
    }
  }
};

ManipulationReport compare_manipulations(const Instance& inst, FirmId f,
                                         Algo algo, int perm_limit = 8);

enum class Cmp { Better, Equal, Worse };

// Effect of one extra seat at a firm on everyone else, under both the
// worker-optimal and firm-optimal matchings.
struct WorkerEffectReport {
  FirmId firm = -1;
  struct PerAlgo {
    Matching before;
    Matching after;
    std::vector<Cmp> worker_change;  // per worker, by its own list
    // Per firm, seat-by-seat change (sets sorted best-first; a vacated
    // seat counts as Worse, a newly filled one as Better).
    std::vector<std::vector<Cmp>> firm_seat_change;
  };
  PerAlgo wosm;
  PerAlgo fosm;
};

WorkerEffectReport worker_effect_report(const Instance& inst, FirmId f);

}  // namespace capmatch::analysis
