#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace capmatch {

using FirmId = int;
using WorkerId = int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matching handed in violates the capacity vector it is checked against.
struct InfeasibleMatchingError : Error {
  using Error::Error;
};
// compare_sets received a worker outside the firm's acceptable set.
struct UnacceptableWorkerError : Error {
  using Error::Error;
};
// An operation that requires complete preference lists got truncated ones.
struct IncompletePreferencesError : Error {
  using Error::Error;
};
// A target matching needs more seats than capacity plus budget allows.
struct TargetBudgetError : Error {
  using Error::Error;
};
// A budgeted planner was called without per-firm budgets.
struct BudgetSpecError : Error {
  using Error::Error;
};
// best_pref would have to sweep more permutations than the configured cap.
struct PermLimitError : Error {
  using Error::Error;
};
// An oracle routine was asked to search beyond its configured limits.
struct LimitExceededError : Error {
  using Error::Error;
};

// How a firm extends its ranking of individual workers to sets of workers.
// Lexicographic: decided by the favorite worker in the symmetric difference.
// StronglyMonotone: larger acceptable sets always win; equal-size sets are
// compared elementwise after sorting both by the firm's list.
enum class ExtensionKind { Lexicographic, StronglyMonotone };

// Ranked ids of the opposite side, most preferred first. Membership is
// exactly acceptability: anyone absent ranks below staying unmatched.
struct PreferenceList {
  std::vector<int> ranked;

  int rank_of(int id) const {
    for (std::size_t i = 0; i < ranked.size(); ++i)
      if (ranked[i] == id) return static_cast<int>(i);
    return -1;
  }

  bool accepts(int id) const { return rank_of(id) >= 0; }

  // Strict preference between two acceptable ids; an unacceptable id loses
  // to any acceptable one.
  bool prefers(int a, int b) const {
    int ra = rank_of(a);
    int rb = rank_of(b);
    if (ra < 0) return false;
    if (rb < 0) return true;
    return ra < rb;
  }
};

struct Instance {
  int n_firms = 0;
  int n_workers = 0;
  std::vector<int> capacities;             // one per firm
  std::vector<PreferenceList> firm_prefs;  // over worker ids
  std::vector<PreferenceList> worker_prefs;  // over firm ids
  std::vector<ExtensionKind> extensions;   // one per firm

  static Instance sized(int firms, int workers) {
    Instance inst;
    inst.n_firms = firms;
    inst.n_workers = workers;
    inst.capacities.assign(firms, 0);
    inst.firm_prefs.assign(firms, {});
    inst.worker_prefs.assign(workers, {});
    inst.extensions.assign(firms, ExtensionKind::Lexicographic);
    return inst;
  }

  Instance with_capacity(FirmId f, int cap) const {
    Instance copy = *this;
    copy.capacities[f] = cap;
    return copy;
  }

  bool mutually_acceptable(WorkerId w, FirmId f) const {
    return firm_prefs[f].accepts(w) && worker_prefs[w].accepts(f);
  }

  bool complete_preferences() const {
    for (const auto& p : firm_prefs)
      if (static_cast<int>(p.ranked.size()) != n_workers) return false;
    for (const auto& p : worker_prefs)
      if (static_cast<int>(p.ranked.size()) != n_firms) return false;
    return true;
  }

  int total_capacity() const {
    int total = 0;
    for (int c : capacities) total += c;
    return total;
  }
};

// Many-to-one assignment. The two directions are kept consistent by
// construction: assign/unassign are the only mutators.
class Matching {
 public:
  static constexpr int kUnmatched = -1;

  Matching() = default;
  Matching(int n_firms, int n_workers)
      : firm_workers_(n_firms), worker_firm_(n_workers, kUnmatched) {}

  int n_firms() const { return static_cast<int>(firm_workers_.size()); }
  int n_workers() const { return static_cast<int>(worker_firm_.size()); }

  bool matched(WorkerId w) const { return worker_firm_[w] != kUnmatched; }
  FirmId firm_of(WorkerId w) const { return worker_firm_[w]; }

  const std::vector<WorkerId>& workers_of(FirmId f) const {
    return firm_workers_[f];
  }
  int size_of(FirmId f) const {
    return static_cast<int>(firm_workers_[f].size());
  }

  void assign(WorkerId w, FirmId f) {
    if (matched(w)) throw Error("matching: worker already assigned");
    worker_firm_[w] = f;
    auto& ws = firm_workers_[f];
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w), w);
  }

  void unassign(WorkerId w) {
    FirmId f = worker_firm_[w];
    if (f == kUnmatched) return;
    auto& ws = firm_workers_[f];
    ws.erase(std::find(ws.begin(), ws.end(), w));
    worker_firm_[w] = kUnmatched;
  }

  bool feasible_for(const std::vector<int>& caps) const {
    for (FirmId f = 0; f < n_firms(); ++f)
      if (size_of(f) > caps[f]) return false;
    return true;
  }

  int n_matched_workers() const {
    int k = 0;
    for (int f : worker_firm_)
      if (f != kUnmatched) ++k;
    return k;
  }

  // Worker -> firm vector; doubles as a canonical sort key.
  const std::vector<int>& assignment() const { return worker_firm_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::vector<WorkerId>> firm_workers_;  // each sorted ascending
  std::vector<int> worker_firm_;
};

struct Blocker {
  enum class Kind { ByFirm, ByWorker, ByPair };
  Kind kind;
  WorkerId worker = -1;
  FirmId firm = -1;

  friend bool operator==(const Blocker&, const Blocker&) = default;
};

struct StabilityReport {
  bool stable = true;
  std::vector<Blocker> blockers;
};

enum class SetOrder { Better, Worse, Equal, Incomparable };

// Structural violations of the instance invariants; empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

// Responsive reduction of the blocking-pair test: the worker prefers f to
// its current match, and f either has a free seat or holds someone worse.
bool is_blocking_pair(const Instance& inst, const Matching& mu, WorkerId w,
                      FirmId f);

// Full stability scan. Blockers come out in a fixed order: firm-side
// individual rationality, worker-side, then pairs in (worker, firm) order.
StabilityReport check_stability(const Instance& inst, const Matching& mu);

// Compare two acceptable worker sets under the firm's declared extension.
// Never returns Incomparable for the two supported extension kinds.
SetOrder compare_sets(const Instance& inst, FirmId f,
                      const std::vector<WorkerId>& lhs,
                      const std::vector<WorkerId>& rhs);

}  // namespace capmatch
