#include "capmatch/core.hpp"

#include <set>

namespace capmatch {

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> errors;
  auto err = [&](std::string msg) { errors.push_back(std::move(msg)); };

  if (inst.n_firms < 0 || inst.n_workers < 0) err("negative agent count");
  if (static_cast<int>(inst.capacities.size()) != inst.n_firms)
    err("capacity-length mismatch");
  if (static_cast<int>(inst.firm_prefs.size()) != inst.n_firms)
    err("firm preference list count mismatch");
  if (static_cast<int>(inst.worker_prefs.size()) != inst.n_workers)
    err("worker preference list count mismatch");
  if (static_cast<int>(inst.extensions.size()) != inst.n_firms)
    err("extension list count mismatch");
  if (!errors.empty()) return errors;  // sizes wrong, skip per-entry checks

  for (int c : inst.capacities)
    if (c < 0) err("negative capacity");

  auto check_list = [&](const PreferenceList& list, int limit,
                        const std::string& who) {
    std::set<int> seen;
    for (int id : list.ranked) {
      if (id < 0 || id >= limit) {
        err(who + ": out-of-range ranked entry");
        continue;
      }
      if (!seen.insert(id).second) err(who + ": duplicate ranked entry");
    }
  };
  for (FirmId f = 0; f < inst.n_firms; ++f)
    check_list(inst.firm_prefs[f], inst.n_workers,
               "firm " + std::to_string(f));
  for (WorkerId w = 0; w < inst.n_workers; ++w)
    check_list(inst.worker_prefs[w], inst.n_firms,
               "worker " + std::to_string(w));
  return errors;
}

bool is_blocking_pair(const Instance& inst, const Matching& mu, WorkerId w,
                      FirmId f) {
  if (mu.firm_of(w) == f) return false;
  if (!inst.worker_prefs[w].accepts(f)) return false;
  if (mu.matched(w) && !inst.worker_prefs[w].prefers(f, mu.firm_of(w)))
    return false;
  if (!inst.firm_prefs[f].accepts(w)) return false;
  if (mu.size_of(f) < inst.capacities[f]) return true;
  for (WorkerId held : mu.workers_of(f))
    if (inst.firm_prefs[f].prefers(w, held)) return true;
  return false;
}

StabilityReport check_stability(const Instance& inst, const Matching& mu) {
  if (!mu.feasible_for(inst.capacities))
    throw InfeasibleMatchingError("matching exceeds a firm capacity");

  StabilityReport report;
  for (FirmId f = 0; f < inst.n_firms; ++f)
    for (WorkerId w : mu.workers_of(f))
      if (!inst.firm_prefs[f].accepts(w))
        report.blockers.push_back({Blocker::Kind::ByFirm, w, f});
  for (WorkerId w = 0; w < inst.n_workers; ++w)
    if (mu.matched(w) && !inst.worker_prefs[w].accepts(mu.firm_of(w)))
      report.blockers.push_back({Blocker::Kind::ByWorker, w, -1});
  for (WorkerId w = 0; w < inst.n_workers; ++w)
    for (FirmId f = 0; f < inst.n_firms; ++f)
      if (is_blocking_pair(inst, mu, w, f))
        report.blockers.push_back({Blocker::Kind::ByPair, w, f});
  report.stable = report.blockers.empty();
  return report;
}

namespace {

// Sort a worker set best-first by the firm's list.
std::vector<WorkerId> by_firm_rank(const PreferenceList& prefs,
                                   std::vector<WorkerId> set) {
  std::sort(set.begin(), set.end(), [&](WorkerId a, WorkerId b) {
    return prefs.rank_of(a) < prefs.rank_of(b);
  });
  return set;
}

}  // namespace

SetOrder compare_sets(const Instance& inst, FirmId f,
                      const std::vector<WorkerId>& lhs,
                      const std::vector<WorkerId>& rhs) {
  const PreferenceList& prefs = inst.firm_prefs[f];
  for (WorkerId w : lhs)
    if (!prefs.accepts(w))
      throw UnacceptableWorkerError("compare_sets: worker " +
                                    std::to_string(w) + " unacceptable");
  for (WorkerId w : rhs)
    if (!prefs.accepts(w))
      throw UnacceptableWorkerError("compare_sets: worker " +
                                    std::to_string(w) + " unacceptable");

  std::vector<WorkerId> a = by_firm_rank(prefs, lhs);
  std::vector<WorkerId> b = by_firm_rank(prefs, rhs);
  if (a == b) return SetOrder::Equal;

  if (inst.extensions[f] == ExtensionKind::StronglyMonotone) {
    if (a.size() != b.size())
      return a.size() > b.size() ? SetOrder::Better : SetOrder::Worse;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return prefs.prefers(a[i], b[i]) ? SetOrder::Better : SetOrder::Worse;
    }
    return SetOrder::Equal;
  }

  // Lexicographic: the favorite worker in the symmetric difference decides.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
      continue;
    }
    return prefs.prefers(a[i], b[j]) ? SetOrder::Better : SetOrder::Worse;
  }
  return i < a.size() ? SetOrder::Better : SetOrder::Worse;
}

}  // namespace capmatch
