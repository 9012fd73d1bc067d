#include "capmatch/capmod.hpp"

#include <algorithm>
#include <functional>

#include "capmatch/canonical.hpp"
#include "capmatch/da.hpp"

namespace capmatch {

std::string to_string(PlanReason reason) {
  switch (reason) {
    case PlanReason::None:
      return "none";
    case PlanReason::MutuallyUnacceptablePair:
      return "MutuallyUnacceptablePair";
    case PlanReason::UnsaturatedDistractingFirm:
      return "UnsaturatedDistractingFirm";
    case PlanReason::TooManyUnmatchedDistractingWorkers:
      return "TooManyUnmatchedDistractingWorkers";
    case PlanReason::UnmatchedDistractingWoman:
      return "UnmatchedDistractingWoman";
    case PlanReason::BudgetExceeded:
      return "BudgetExceeded";
    case PlanReason::GroupBudgetExceeded:
      return "GroupBudgetExceeded";
    case PlanReason::TargetBlocked:
      return "TargetBlocked";
    case PlanReason::NoFeasibleCandidate:
      return "NoFeasibleCandidate";
  }
  return "unknown";
}

namespace {

void erase_id(std::vector<int>& ranked, int id) {
  ranked.erase(std::remove(ranked.begin(), ranked.end(), id), ranked.end());
}

// Keep only entries strictly preferred to `pivot`, optionally pivot itself.
void truncate_below(PreferenceList& list, int pivot, bool keep_pivot) {
  std::vector<int> kept;
  for (int id : list.ranked) {
    if (id == pivot) {
      if (keep_pivot) kept.push_back(id);
      break;
    }
    kept.push_back(id);
  }
  list.ranked = std::move(kept);
}

// Drop a worker from the instance: clears its list and every firm's entry.
void remove_worker(Instance& inst, WorkerId w) {
  inst.worker_prefs[w].ranked.clear();
  for (auto& p : inst.firm_prefs) erase_id(p.ranked, w);
}

void remove_firm(Instance& inst, FirmId f) {
  inst.firm_prefs[f].ranked.clear();
  for (auto& p : inst.worker_prefs) erase_id(p.ranked, f);
}

// Entries of `list` ahead of `pivot` whose owners also accept `self`.
template <typename Accepts>
std::vector<int> distracting_prefix(const PreferenceList& list, int pivot,
                                    Accepts accepts_self) {
  std::vector<int> out;
  for (int id : list.ranked) {
    if (id == pivot) break;
    if (accepts_self(id)) out.push_back(id);
  }
  return out;
}

void require_one_to_one(const Instance& one) {
  for (int c : one.capacities)
    if (c != 1) throw Error("expected a one-to-one instance");
}

}  // namespace

TruncationContext build_truncation_context(const Instance& inst, WorkerId ws,
                                           FirmId fs) {
  TruncationContext ctx;
  // Distracting agents: those able to block the forced (ws, fs) pairing.
  ctx.distracting_workers = distracting_prefix(
      inst.firm_prefs[fs], ws,
      [&](WorkerId w) { return inst.worker_prefs[w].accepts(fs); });
  ctx.distracting_firms = distracting_prefix(
      inst.worker_prefs[ws], fs,
      [&](FirmId f) { return inst.firm_prefs[f].accepts(ws); });

  ctx.truncated = inst;
  for (WorkerId w : ctx.distracting_workers)
    truncate_below(ctx.truncated.worker_prefs[w], fs, true);
  for (FirmId f : ctx.distracting_firms)
    truncate_below(ctx.truncated.firm_prefs[f], ws, false);
  remove_worker(ctx.truncated, ws);
  ctx.truncated.capacities[fs] = std::max(0, inst.capacities[fs] - 1);

  ctx.wosm = run(ctx.truncated, Algo::WPDA);
  for (WorkerId w : ctx.distracting_workers)
    if (!ctx.wosm.matched(w)) ctx.unmatched_distracting_workers.push_back(w);
  for (FirmId f : ctx.distracting_firms)
    if (ctx.wosm.size_of(f) < ctx.truncated.capacities[f])
      ctx.unsaturated_distracting_firms.push_back(f);
  return ctx;
}

PlanResult add_capacity_match_pair(const Instance& inst, WorkerId ws,
                                   FirmId fs, int budget) {
  if (!inst.mutually_acceptable(ws, fs))
    return PlanResult::fail(PlanReason::MutuallyUnacceptablePair);

  TruncationContext ctx = build_truncation_context(inst, ws, fs);
  if (!ctx.unsaturated_distracting_firms.empty())
    return PlanResult::fail(PlanReason::UnsaturatedDistractingFirm);

  const auto& udw = ctx.unmatched_distracting_workers;
  const int extra = inst.capacities[fs] == 0 ? 1 : 0;
  const int seats = static_cast<int>(udw.size()) + extra;
  if (seats > budget)
    return PlanResult::fail(PlanReason::TooManyUnmatchedDistractingWorkers);

  Matching cert = ctx.wosm;
  cert.assign(ws, fs);
  for (WorkerId w : udw) cert.assign(w, fs);

  PlanResult res;
  res.feasible = true;
  res.new_caps = inst.capacities;
  res.new_caps[fs] += seats;
  res.certificate = std::move(cert);
  res.seats_changed = seats;
  return res;
}

MenPlanResult delete_men_match_pair(const Instance& one, FirmId ps,
                                    WorkerId qs, int budget) {
  require_one_to_one(one);
  if (!one.mutually_acceptable(qs, ps))
    return MenPlanResult::fail(PlanReason::MutuallyUnacceptablePair);

  std::vector<FirmId> a = distracting_prefix(
      one.worker_prefs[qs], ps,
      [&](FirmId p) { return one.firm_prefs[p].accepts(qs); });
  std::vector<WorkerId> b = distracting_prefix(
      one.firm_prefs[ps], qs,
      [&](WorkerId q) { return one.worker_prefs[q].accepts(ps); });

  Instance trunc = one;
  for (FirmId p : a) truncate_below(trunc.firm_prefs[p], qs, false);
  for (WorkerId q : b) truncate_below(trunc.worker_prefs[q], ps, false);
  remove_firm(trunc, ps);
  remove_worker(trunc, qs);

  Matching mu = run(trunc, Algo::WPDA);

  for (WorkerId q : b)
    if (!mu.matched(q))
      return MenPlanResult::fail(PlanReason::UnmatchedDistractingWoman);

  std::vector<int> pbar;
  for (FirmId p : a)
    if (mu.size_of(p) == 0) pbar.push_back(p);
  if (static_cast<int>(pbar.size()) > budget)
    return MenPlanResult::fail(PlanReason::BudgetExceeded);

  Matching cert = mu;
  cert.assign(qs, ps);

  MenPlanResult res;
  res.feasible = true;
  res.men = std::move(pbar);
  res.certificate = std::move(cert);
  return res;
}

MenPlanResult delete_men_multiple_pairs(const Instance& one,
                                        const std::vector<FirmId>& men,
                                        WorkerId woman, int budget) {
  for (FirmId p : men) {
    MenPlanResult r = delete_men_match_pair(one, p, woman, budget);
    if (r.feasible) return r;
  }
  return MenPlanResult::fail(PlanReason::NoFeasibleCandidate);
}

PlanResult delete_capacity_match_pair(const Instance& inst, WorkerId ws,
                                      FirmId fs, int budget) {
  if (!inst.mutually_acceptable(ws, fs))
    return PlanResult::fail(PlanReason::MutuallyUnacceptablePair);
  auto [one, map] = to_one_to_one(inst);
  MenPlanResult r =
      delete_men_multiple_pairs(one, map.firm_copies[fs], ws, budget);
  if (!r.feasible) return PlanResult::fail(r.reason);

  PlanResult res;
  res.feasible = true;
  res.new_caps = inst.capacities;
  for (int p : r.men) res.new_caps[map.firm_of_man[p]] -= 1;
  res.certificate = compress_matching(map, *r.certificate);
  res.seats_changed = static_cast<int>(r.men.size());
  return res;
}

namespace {

// Scan seat-change vectors in lexicographically ascending order, within the
// global and per-firm bounds, and return the first one the test accepts.
template <typename Test>
PlanResult exact_scan(const Instance& inst, const BudgetSpec& budget,
                      bool add, Test test) {
  if (!budget.per_firm)
    throw BudgetSpecError("exact solver requires per-firm budgets");
  const int n = inst.n_firms;
  std::vector<int> delta(n, 0);
  PlanResult found = PlanResult::fail(PlanReason::NoFeasibleCandidate);

  auto bound = [&](FirmId f) {
    int b = std::min((*budget.per_firm)[f], budget.global);
    if (!add) b = std::min(b, inst.capacities[f]);
    return b;
  };

  std::function<bool(int, int)> rec = [&](FirmId f, int used) {
    if (f == n) {
      std::vector<int> caps = inst.capacities;
      for (FirmId i = 0; i < n; ++i) caps[i] += add ? delta[i] : -delta[i];
      std::optional<Matching> cert = test(caps);
      if (!cert) return false;
      found.feasible = true;
      found.new_caps = std::move(caps);
      found.certificate = std::move(cert);
      found.seats_changed = used;
      found.reason = PlanReason::None;
      return true;
    }
    for (int d = 0; d <= std::min(bound(f), budget.global - used); ++d) {
      delta[f] = d;
      if (rec(f + 1, used + d)) return true;
    }
    delta[f] = 0;
    return false;
  };
  rec(0, 0);
  return found;
}

}  // namespace

PlanResult budgeted_add_match_pair_exact(const Instance& inst, WorkerId w,
                                         FirmId f, const BudgetSpec& budget) {
  if (!budget.per_firm)
    throw BudgetSpecError("exact solver requires per-firm budgets");
  if (!inst.mutually_acceptable(w, f))
    return PlanResult::fail(PlanReason::MutuallyUnacceptablePair);
  Instance probe = inst;
  return exact_scan(inst, budget, true,
                    [&](const std::vector<int>& caps) -> std::optional<Matching> {
                      probe.capacities = caps;
                      PlanResult r = add_capacity_match_pair(probe, w, f, 0);
                      return r.feasible ? r.certificate : std::nullopt;
                    });
}

PlanResult budgeted_delete_match_pair_exact(const Instance& inst, WorkerId w,
                                            FirmId f,
                                            const BudgetSpec& budget) {
  if (!budget.per_firm)
    throw BudgetSpecError("exact solver requires per-firm budgets");
  if (!inst.mutually_acceptable(w, f))
    return PlanResult::fail(PlanReason::MutuallyUnacceptablePair);
  Instance probe = inst;
  return exact_scan(inst, budget, false,
                    [&](const std::vector<int>& caps) -> std::optional<Matching> {
                      probe.capacities = caps;
                      PlanResult r = add_capacity_match_pair(probe, w, f, 0);
                      return r.feasible ? r.certificate : std::nullopt;
                    });
}

namespace {

// Blocking test on a one-to-one instance restricted to the present men.
// `mu` must already be the target matching restricted to those men.
bool pair_blocks(const Instance& one, const std::vector<bool>& present,
                 const Matching& mu, FirmId p, WorkerId q) {
  if (!present[p]) return false;
  if (mu.firm_of(q) == p) return false;
  if (!one.firm_prefs[p].accepts(q) || !one.worker_prefs[q].accepts(p))
    return false;
  if (mu.size_of(p) > 0 &&
      !one.firm_prefs[p].prefers(q, mu.workers_of(p).front()))
    return false;
  if (mu.matched(q) && !one.worker_prefs[q].prefers(p, mu.firm_of(q)))
    return false;
  return true;
}

// Individual-rationality violation of the pair held by man p.
bool pair_irrational(const Instance& one, const Matching& mu, FirmId p) {
  if (mu.size_of(p) == 0) return false;
  WorkerId q = mu.workers_of(p).front();
  return !one.firm_prefs[p].accepts(q) || !one.worker_prefs[q].accepts(p);
}

Matching restrict_to(const Matching& mu_star, const std::vector<bool>& present) {
  Matching mu(mu_star.n_firms(), mu_star.n_workers());
  for (WorkerId q = 0; q < mu_star.n_workers(); ++q) {
    FirmId p = mu_star.firm_of(q);
    if (p != Matching::kUnmatched && present[p]) mu.assign(q, p);
  }
  return mu;
}

}  // namespace

MenPlanResult add_men_stabilize(const Instance& one,
                                const std::vector<bool>& addable, int budget,
                                const Matching& mu_star) {
  require_one_to_one(one);
  if (!one.complete_preferences())
    throw IncompletePreferencesError(
        "add_men_stabilize requires complete preferences");

  const int n = one.n_firms;
  const int m = one.n_workers;
  std::vector<bool> present(n);
  for (FirmId p = 0; p < n; ++p) present[p] = !addable[p];
  std::vector<int> added;

  for (;;) {
    Matching mu = restrict_to(mu_star, present);
    std::vector<FirmId> need;
    for (WorkerId q = 0; q < m; ++q) {
      bool blocked = false;
      for (FirmId p = 0; p < n && !blocked; ++p)
        blocked = pair_blocks(one, present, mu, p, q);
      if (!blocked) continue;
      FirmId partner = mu_star.firm_of(q);
      if (partner != Matching::kUnmatched && addable[partner] &&
          !present[partner])
        need.push_back(partner);
    }
    if (need.empty()) break;
    for (FirmId p : need) {
      if (present[p]) continue;
      present[p] = true;
      added.push_back(p);
    }
  }

  Matching mu = restrict_to(mu_star, present);
  for (FirmId p = 0; p < n; ++p)
    if (present[p] && pair_irrational(one, mu, p))
      return MenPlanResult::fail(PlanReason::TargetBlocked);
  for (WorkerId q = 0; q < m; ++q)
    for (FirmId p = 0; p < n; ++p)
      if (pair_blocks(one, present, mu, p, q))
        return MenPlanResult::fail(PlanReason::TargetBlocked);
  if (static_cast<int>(added.size()) > budget)
    return MenPlanResult::fail(PlanReason::BudgetExceeded);

  std::sort(added.begin(), added.end());
  MenPlanResult res;
  res.feasible = true;
  res.men = std::move(added);
  res.certificate = std::move(mu);
  return res;
}

MenPlanResult delete_men_stabilize(const Instance& one,
                                   const GroupPartition& part, int budget,
                                   const Matching& mu_star) {
  require_one_to_one(one);
  const int n = one.n_firms;
  const int m = one.n_workers;
  std::vector<bool> present(n, true);
  std::vector<int> deleted;

  for (;;) {
    Matching mu = restrict_to(mu_star, present);
    std::vector<FirmId> bad;
    for (FirmId p = 0; p < n; ++p) {
      if (!present[p]) continue;
      if (pair_irrational(one, mu, p)) {
        bad.push_back(p);
        continue;
      }
      for (WorkerId q = 0; q < m; ++q)
        if (pair_blocks(one, present, mu, p, q)) {
          bad.push_back(p);
          break;
        }
    }
    if (bad.empty()) break;
    for (FirmId p : bad) {
      present[p] = false;
      deleted.push_back(p);
    }
  }

  if (static_cast<int>(deleted.size()) > budget)
    return MenPlanResult::fail(PlanReason::BudgetExceeded);
  std::vector<int> per_group(part.group_budget.size(), 0);
  for (FirmId p : deleted)
    if (++per_group[part.group_of[p]] > part.group_budget[part.group_of[p]])
      return MenPlanResult::fail(PlanReason::GroupBudgetExceeded);

  std::sort(deleted.begin(), deleted.end());
  MenPlanResult res;
  res.feasible = true;
  res.men = std::move(deleted);
  res.certificate = restrict_to(mu_star, present);
  return res;
}

PlanResult add_capacity_stabilize(const Instance& inst,
                                  const BudgetSpec& budget,
                                  const Matching& mu_star) {
  if (!inst.complete_preferences())
    throw IncompletePreferencesError(
        "add_capacity_stabilize requires complete preferences");
  const int n = inst.n_firms;
  std::vector<int> firm_budget =
      budget.per_firm ? *budget.per_firm : std::vector<int>(n, budget.global);
  std::vector<int> copies(n);
  for (FirmId f = 0; f < n; ++f) {
    if (mu_star.size_of(f) > inst.capacities[f] + firm_budget[f])
      throw TargetBudgetError("target matching exceeds capacity plus budget");
    copies[f] = std::max(inst.capacities[f], mu_star.size_of(f));
  }

  auto [one, map] = to_one_to_one_with_copies(inst, copies);
  Matching mu1 = expand_matching(inst, map, mu_star);
  std::vector<bool> addable(map.n_men(), false);
  for (int p = 0; p < map.n_men(); ++p)
    addable[p] = map.copy_index[p] >= inst.capacities[map.firm_of_man[p]];

  MenPlanResult r = add_men_stabilize(one, addable, budget.global, mu1);
  if (!r.feasible) return PlanResult::fail(r.reason);

  PlanResult res;
  res.feasible = true;
  res.new_caps = inst.capacities;
  for (int p : r.men) res.new_caps[map.firm_of_man[p]] += 1;
  res.certificate = compress_matching(map, *r.certificate);
  res.seats_changed = static_cast<int>(r.men.size());
  return res;
}

PlanResult delete_capacity_stabilize(const Instance& inst,
                                     const BudgetSpec& budget,
                                     const Matching& mu_star) {
  const int n = inst.n_firms;
  for (FirmId f = 0; f < n; ++f)
    if (mu_star.size_of(f) > inst.capacities[f])
      throw InfeasibleMatchingError("target matching exceeds capacities");

  // Pairs that are not mutually acceptable can never persist in a stable
  // subset; drop them up front so they are not charged against the budget.
  Matching clean = mu_star;
  for (WorkerId w = 0; w < inst.n_workers; ++w) {
    FirmId f = clean.firm_of(w);
    if (f != Matching::kUnmatched && !inst.mutually_acceptable(w, f))
      clean.unassign(w);
  }

  auto [one, map] = to_one_to_one(inst);
  Matching mu1 = expand_matching(inst, map, clean);
  GroupPartition part;
  part.group_of = map.firm_of_man;
  part.group_budget =
      budget.per_firm ? *budget.per_firm : std::vector<int>(n, budget.global);

  MenPlanResult r = delete_men_stabilize(one, part, budget.global, mu1);
  if (!r.feasible) return PlanResult::fail(r.reason);

  PlanResult res;
  res.feasible = true;
  res.new_caps = inst.capacities;
  for (int p : r.men) res.new_caps[map.firm_of_man[p]] -= 1;
  res.certificate = compress_matching(map, *r.certificate);
  res.seats_changed = static_cast<int>(r.men.size());
  return res;
}

bool is_stable_pair(const Instance& inst, WorkerId w, FirmId f) {
  return add_capacity_match_pair(inst, w, f, 0).feasible;
}

}  // namespace capmatch
