#include "capmatch/da.hpp"

namespace capmatch {

namespace {

void insert_unique_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

std::pair<Matching, ProposalTrace> wpda(const Instance& inst) {
  const int n = inst.n_firms;
  const int m = inst.n_workers;
  Matching mu(n, m);
  ProposalTrace trace;
  trace.algo = Algo::WPDA;
  trace.proposals_to_firm.assign(n, {});

  std::vector<int> next(m, 0);  // per worker, next untried list position
  const int round_cap = n * m + 1;

  for (;;) {
    std::vector<std::vector<WorkerId>> incoming(n);
    bool any = false;
    for (WorkerId w = 0; w < m; ++w) {
      if (mu.matched(w)) continue;
      const auto& list = inst.worker_prefs[w].ranked;
      if (next[w] >= static_cast<int>(list.size())) continue;
      incoming[list[next[w]++]].push_back(w);
      any = true;
    }
    if (!any) break;
    if (++trace.rounds > round_cap)
      throw std::logic_error("wpda: round limit exceeded");

    for (FirmId f = 0; f < n; ++f)
      for (WorkerId w : incoming[f]) {
        trace.events.push_back({trace.rounds, false, w, f});
        insert_unique_sorted(trace.proposals_to_firm[f], w);
      }

    for (FirmId f = 0; f < n; ++f) {
      if (incoming[f].empty()) continue;
      std::vector<WorkerId> pool = mu.workers_of(f);
      pool.insert(pool.end(), incoming[f].begin(), incoming[f].end());
      std::sort(pool.begin(), pool.end(), [&](WorkerId a, WorkerId b) {
        return inst.firm_prefs[f].prefers(a, b);
      });
      int keep = 0;
      while (keep < static_cast<int>(pool.size()) &&
             keep < inst.capacities[f] &&
             inst.firm_prefs[f].accepts(pool[keep]))
        ++keep;
      for (int i = keep; i < static_cast<int>(pool.size()); ++i) {
        if (mu.firm_of(pool[i]) == f) mu.unassign(pool[i]);
        trace.events.push_back({trace.rounds, true, pool[i], f});
      }
      for (int i = 0; i < keep; ++i)
        if (mu.firm_of(pool[i]) != f) mu.assign(pool[i], f);
    }
  }
  return {mu, trace};
}

std::pair<Matching, ProposalTrace> fpda(const Instance& inst) {
  const int n = inst.n_firms;
  const int m = inst.n_workers;
  Matching mu(n, m);
  ProposalTrace trace;
  trace.algo = Algo::FPDA;
  trace.proposals_to_worker.assign(m, {});

  std::vector<int> next(n, 0);  // per firm, next untried list position
  const int round_cap = n * m + 1;

  for (;;) {
    std::vector<std::vector<FirmId>> incoming(m);
    bool any = false;
    for (FirmId f = 0; f < n; ++f) {
      const auto& list = inst.firm_prefs[f].ranked;
      int free = inst.capacities[f] - mu.size_of(f);
      while (free > 0 && next[f] < static_cast<int>(list.size())) {
        incoming[list[next[f]++]].push_back(f);
        --free;
        any = true;
      }
    }
    if (!any) break;
    if (++trace.rounds > round_cap)
      throw std::logic_error("fpda: round limit exceeded");

    for (WorkerId w = 0; w < m; ++w)
      for (FirmId f : incoming[w]) {
        trace.events.push_back({trace.rounds, false, w, f});
        insert_unique_sorted(trace.proposals_to_worker[w], f);
      }

    for (WorkerId w = 0; w < m; ++w) {
      if (incoming[w].empty()) continue;
      std::vector<FirmId> pool = incoming[w];
      if (mu.matched(w)) pool.push_back(mu.firm_of(w));
      FirmId best = -1;
      for (FirmId f : pool)
        if (inst.worker_prefs[w].accepts(f) &&
            (best == -1 || inst.worker_prefs[w].prefers(f, best)))
          best = f;
      for (FirmId f : pool) {
        if (f == best) continue;
        if (mu.firm_of(w) == f) mu.unassign(w);
        trace.events.push_back({trace.rounds, true, w, f});
      }
      if (best != -1 && mu.firm_of(w) != best) mu.assign(w, best);
    }
  }
  return {mu, trace};
}

}  // namespace capmatch
