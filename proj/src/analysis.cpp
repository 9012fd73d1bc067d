#include "capmatch/analysis.hpp"

#include <algorithm>

namespace capmatch::analysis {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::BelowPeak:
      return "below-peak";
    case Regime::AtPeak:
      return "at-peak";
    case Regime::AbovePeak:
      return "above-peak";
  }
  return "unknown";
}

std::string to_string(Action action) {
  switch (action) {
    case Action::Add:
      return "add";
    case Action::Delete:
      return "delete";
    case Action::Pref:
      return "pref";
  }
  return "unknown";
}

PeakReport peak(const Instance& inst, FirmId f) {
  Matching mu = run(inst.with_capacity(f, inst.n_workers), Algo::WPDA);
  PeakReport report;
  report.firm = f;
  report.peak = mu.size_of(f);
  report.capacity = inst.capacities[f];
  report.at_peak_wosm_set = mu.workers_of(f);
  report.regime = report.capacity < report.peak    ? Regime::BelowPeak
                  : report.capacity == report.peak ? Regime::AtPeak
                                                   : Regime::AbovePeak;
  return report;
}

std::optional<CapacityMove> best_add(const Instance& inst, FirmId f,
                                     Algo algo) {
  const std::vector<WorkerId> truthful = run_outcome(inst, algo, f);
  const int p = peak(inst, f).peak;
  std::optional<CapacityMove> best;
  for (int b = inst.capacities[f] + 1; b <= p; ++b) {
    std::vector<WorkerId> out = run_outcome(inst.with_capacity(f, b), algo, f);
    if (compare_sets(inst, f, out, truthful) != SetOrder::Better) continue;
    if (!best || compare_sets(inst, f, out, best->outcome) == SetOrder::Better)
      best = CapacityMove{b, std::move(out)};
  }
  return best;
}

std::optional<CapacityMove> best_delete(const Instance& inst, FirmId f,
                                        Algo algo) {
  const std::vector<WorkerId> truthful = run_outcome(inst, algo, f);
  std::optional<CapacityMove> best;
  for (int b = 0; b < inst.capacities[f]; ++b) {
    std::vector<WorkerId> out = run_outcome(inst.with_capacity(f, b), algo, f);
    if (compare_sets(inst, f, out, truthful) != SetOrder::Better) continue;
    if (!best || compare_sets(inst, f, out, best->outcome) == SetOrder::Better)
      best = CapacityMove{b, std::move(out)};
  }
  return best;
}

std::optional<PrefMove> best_pref(const Instance& inst, FirmId f, Algo algo,
                                  int perm_limit) {
  std::vector<WorkerId> perm = inst.firm_prefs[f].ranked;
  if (static_cast<int>(perm.size()) > perm_limit)
    throw PermLimitError("best_pref: " + std::to_string(perm.size()) +
                         " acceptable workers exceed the permutation limit " +
                         std::to_string(perm_limit));
  const std::vector<WorkerId> truthful = run_outcome(inst, algo, f);
  std::sort(perm.begin(), perm.end());
  std::optional<PrefMove> best;
  Instance misreport = inst;
  do {
    misreport.firm_prefs[f].ranked = perm;
    std::vector<WorkerId> out = run_outcome(misreport, algo, f);
    // Valued under the true preferences, not the reported ones.
    if (compare_sets(inst, f, out, truthful) != SetOrder::Better) continue;
    if (!best || compare_sets(inst, f, out, best->outcome) == SetOrder::Better)
      best = PrefMove{perm, std::move(out)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ManipulationReport compare_manipulations(const Instance& inst, FirmId f,
                                         Algo algo, int perm_limit) {
  ManipulationReport report;
  report.firm = f;
  report.algo = algo;
  report.peak = peak(inst, f);
  report.truthful = run_outcome(inst, algo, f);
  report.add = best_add(inst, f, algo);
  report.del = best_delete(inst, f, algo);
  report.pref = best_pref(inst, f, algo, perm_limit);
  const Action actions[] = {Action::Add, Action::Delete, Action::Pref};
  for (Action x : actions)
    for (Action y : actions) {
      if (x == y) continue;
      report.beats[static_cast<int>(x)][static_cast<int>(y)] =
          compare_sets(inst, f, report.outcome_of(x), report.outcome_of(y)) ==
          SetOrder::Better;
    }
  return report;
}

namespace {

Cmp worker_cmp(const Instance& inst, WorkerId w, FirmId before, FirmId after) {
  if (before == after) return Cmp::Equal;
  const PreferenceList& prefs = inst.worker_prefs[w];
  if (before == Matching::kUnmatched) return Cmp::Better;
  if (after == Matching::kUnmatched) return Cmp::Worse;
  return prefs.prefers(after, before) ? Cmp::Better : Cmp::Worse;
}

std::vector<WorkerId> best_first(const Instance& inst, FirmId f,
                                 std::vector<WorkerId> set) {
  std::sort(set.begin(), set.end(), [&](WorkerId a, WorkerId b) {
    return inst.firm_prefs[f].prefers(a, b);
  });
  return set;
}

void fill_per_algo(const Instance& inst, Algo algo, const Instance& plus,
                   WorkerEffectReport::PerAlgo& out) {
  out.before = run(inst, algo);
  out.after = run(plus, algo);
  out.worker_change.resize(inst.n_workers);
  for (WorkerId w = 0; w < inst.n_workers; ++w)
    out.worker_change[w] =
        worker_cmp(inst, w, out.before.firm_of(w), out.after.firm_of(w));
  out.firm_seat_change.resize(inst.n_firms);
  for (FirmId f = 0; f < inst.n_firms; ++f) {
    std::vector<WorkerId> old_set = best_first(inst, f, out.before.workers_of(f));
    std::vector<WorkerId> new_set = best_first(inst, f, out.after.workers_of(f));
    std::size_t seats = std::max(old_set.size(), new_set.size());
    auto& cmp = out.firm_seat_change[f];
    for (std::size_t i = 0; i < seats; ++i) {
      if (i >= old_set.size())
        cmp.push_back(Cmp::Better);
      else if (i >= new_set.size())
        cmp.push_back(Cmp::Worse);
      else if (old_set[i] == new_set[i])
        cmp.push_back(Cmp::Equal);
      else
        cmp.push_back(inst.firm_prefs[f].prefers(new_set[i], old_set[i])
                          ? Cmp::Better
                          : Cmp::Worse);
    }
  }
}

}  // namespace

WorkerEffectReport worker_effect_report(const Instance& inst, FirmId f) {
  Instance plus = inst.with_capacity(f, inst.capacities[f] + 1);
  WorkerEffectReport report;
  report.firm = f;
  fill_per_algo(inst, Algo::WPDA, plus, report.wosm);
  fill_per_algo(inst, Algo::FPDA, plus, report.fosm);
  return report;
}

}  // namespace capmatch::analysis
