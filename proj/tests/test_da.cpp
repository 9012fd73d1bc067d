#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "capmatch/capmod.hpp"
#include "capmatch/da.hpp"
#include "capmatch/oracle.hpp"
#include "support.hpp"

using namespace capmatch;
using support::fixture;
using support::mk_matching;
using support::with_caps;

TEST_CASE("wpda and fpda reproduce the lexicographic example") {
  Instance lp = fixture("lex_firm_worse");

  // Unit capacities: unique stable matching.
  Matching mu1 = mk_matching(2, 3, {{0, 0}, {2, 1}});
  CHECK(run(lp, Algo::WPDA) == mu1);
  CHECK(run(lp, Algo::FPDA) == mu1);

  // One extra seat at f1: worker- and firm-optimal matchings split.
  Instance lp21 = with_caps(lp, {2, 1});
  Matching mu2 = mk_matching(2, 3, {{0, 0}, {1, 0}, {2, 1}});
  Matching mu3 = mk_matching(2, 3, {{1, 0}, {2, 0}, {0, 1}});
  CHECK(run(lp21, Algo::FPDA) == mu2);
  CHECK(run(lp21, Algo::WPDA) == mu3);

  // Another seat at f2: back to a unique stable matching.
  Instance lp22 = with_caps(lp, {2, 2});
  CHECK(run(lp22, Algo::WPDA) == mu3);
  CHECK(run(lp22, Algo::FPDA) == mu3);
}

TEST_CASE("fpda reproduces the strongly monotone example") {
  Instance sm = fixture("monotone_firm_worse");
  CHECK(run(sm, Algo::FPDA) == mk_matching(2, 2, {{0, 0}, {1, 1}}));
  Instance sm12 = with_caps(sm, {1, 2});
  CHECK(run(sm12, Algo::FPDA) == mk_matching(2, 2, {{0, 1}, {1, 0}}));
}

TEST_CASE("master list instances") {
  Instance ml = fixture("master_list_2x2");
  CHECK(run(ml, Algo::WPDA) == mk_matching(2, 2, {{0, 1}}));
  Instance ml11 = with_caps(ml, {1, 1});
  Matching improved = mk_matching(2, 2, {{0, 0}, {1, 1}});
  CHECK(run(ml11, Algo::WPDA) == improved);
  CHECK(run(ml11, Algo::FPDA) == improved);
}

TEST_CASE("wpda proposal trace on the peak example") {
  Instance pk = fixture("peak_vs_proposals");
  auto [mu, trace] = wpda(pk);
  CHECK(trace.proposals_to_firm[0] == std::vector<WorkerId>{0, 1, 2, 3});
  CHECK(mu == mk_matching(3, 4, {{0, 0}, {1, 1}, {2, 2}}));

  auto [mu2, trace2] = wpda(pk.with_capacity(0, 2));
  CHECK(trace2.proposals_to_firm[0] == std::vector<WorkerId>{0, 1});
  CHECK(mu2.workers_of(0) == std::vector<WorkerId>{0, 1});
}

TEST_CASE("degenerate instances") {
  Instance nobody = Instance::sized(2, 2);
  nobody.capacities = {1, 1};
  auto [mu, trace] = wpda(nobody);
  CHECK(mu.n_matched_workers() == 0);
  CHECK(trace.rounds == 0);

  Instance zero_cap = Instance::sized(1, 1);
  zero_cap.capacities = {0};
  zero_cap.firm_prefs[0].ranked = {0};
  zero_cap.worker_prefs[0].ranked = {0};
  CHECK(run(zero_cap, Algo::FPDA).n_matched_workers() == 0);
  CHECK(run(zero_cap, Algo::WPDA).n_matched_workers() == 0);
}

TEST_CASE("trace invariants hold on random instances") {
  support::SampleParams params;
  params.count = 150;
  params.seed = 5;
  for (const Instance& inst : support::sample_instances(params)) {
    auto [wm, wt] = wpda(inst);
    auto [fm, ft] = fpda(inst);
    CHECK(check_stability(inst, wm).stable);
    CHECK(check_stability(inst, fm).stable);

    // Cumulative proposal sets grow monotonically by construction; verify
    // events and final sets agree.
    std::vector<std::vector<WorkerId>> seen(inst.n_firms);
    for (const auto& e : wt.events) {
      CHECK(e.round >= 1);
      CHECK(e.round <= wt.rounds);
      if (!e.rejection) {
        auto& v = seen[e.firm];
        if (std::find(v.begin(), v.end(), e.worker) == v.end())
          v.push_back(e.worker);
      }
    }
    for (FirmId f = 0; f < inst.n_firms; ++f)
      CHECK(support::sorted_set(seen[f]) == wt.proposals_to_firm[f]);

    std::vector<std::vector<FirmId>> offered(inst.n_workers);
    for (const auto& e : ft.events)
      if (!e.rejection) {
        auto& v = offered[e.worker];
        if (std::find(v.begin(), v.end(), e.firm) == v.end())
          v.push_back(e.firm);
      }
    for (WorkerId w = 0; w < inst.n_workers; ++w)
      CHECK(support::sorted_set(offered[w]) == ft.proposals_to_worker[w]);

    // Final tentative acceptances are exactly the returned matching: every
    // matched pair was proposed and never rejected afterwards, and every
    // proposed-but-unmatched pair was rejected.
    for (const auto* side : {&wt, &ft}) {
      const Matching& mu = side == &wt ? wm : fm;
      std::vector<std::pair<int, int>> last_prop, last_rej;
      auto last_event_round = [&](WorkerId w, FirmId f, bool rejection) {
        int round = 0;
        for (const auto& e : side->events)
          if (e.worker == w && e.firm == f && e.rejection == rejection)
            round = e.round;
        return round;
      };
      for (const auto& e : side->events) {
        WorkerId w = e.worker;
        FirmId f = e.firm;
        int prop = last_event_round(w, f, false);
        int rej = last_event_round(w, f, true);
        if (mu.firm_of(w) == f)
          CHECK(prop > rej);
        else
          CHECK(rej >= prop);
      }
    }
  }
}

TEST_CASE("optimality and rural hospitals against the oracle") {
  support::SampleParams params;
  params.count = 120;
  params.seed = 11;
  auto limits = support::wide_limits();
  for (const Instance& inst : support::sample_instances(params)) {
    auto stable = oracle::enumerate_stable_matchings(inst, limits);
    Matching wosm = run(inst, Algo::WPDA);
    Matching fosm = run(inst, Algo::FPDA);
    REQUIRE(std::find(stable.begin(), stable.end(), wosm) != stable.end());
    REQUIRE(std::find(stable.begin(), stable.end(), fosm) != stable.end());

    for (const Matching& mu : stable) {
      for (WorkerId w = 0; w < inst.n_workers; ++w) {
        if (wosm.firm_of(w) == mu.firm_of(w)) continue;
        CHECK(mu.firm_of(w) != Matching::kUnmatched);  // rural hospitals
        CHECK(inst.worker_prefs[w].prefers(wosm.firm_of(w), mu.firm_of(w)));
      }
      for (FirmId f = 0; f < inst.n_firms; ++f) {
        // Rural hospitals: constant size, and identical sets when slack.
        CHECK(mu.size_of(f) == wosm.size_of(f));
        if (mu.size_of(f) < inst.capacities[f])
          CHECK(mu.workers_of(f) == wosm.workers_of(f));
        SetOrder cmp = compare_sets(inst, f, fosm.workers_of(f),
                                    mu.workers_of(f));
        CHECK((cmp == SetOrder::Better || cmp == SetOrder::Equal));
      }
    }
  }
}

TEST_CASE("operations are safe to share across threads") {
  // Everything is a pure function of its inputs; hammer a shared instance
  // from several threads and require identical answers.
  Instance lp21 = with_caps(fixture("lex_firm_worse"), {2, 1});
  Matching expected_w = run(lp21, Algo::WPDA);
  Matching expected_f = run(lp21, Algo::FPDA);
  PlanResult expected_plan = add_capacity_match_pair(lp21, 0, 1, 1);
  std::vector<std::thread> pool;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (int i = 0; i < 200; ++i) {
        if (run(lp21, Algo::WPDA) != expected_w) ++mismatches[t];
        if (run(lp21, Algo::FPDA) != expected_f) ++mismatches[t];
        PlanResult r = add_capacity_match_pair(lp21, 0, 1, 1);
        if (r.feasible != expected_plan.feasible ||
            r.new_caps != expected_plan.new_caps)
          ++mismatches[t];
      }
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) CHECK(mismatches[t] == 0);
}

TEST_CASE("proposal sets shrink as capacity grows") {
  support::SampleParams params;
  params.count = 80;
  params.seed = 23;
  for (const Instance& inst : support::sample_instances(params)) {
    for (FirmId f = 0; f < inst.n_firms; ++f) {
      std::vector<WorkerId> prev;  // proposals at the smaller capacity
      for (int cap = 0; cap <= inst.n_workers; ++cap) {
        auto [mu, trace] = wpda(inst.with_capacity(f, cap));
        const auto& cur = trace.proposals_to_firm[f];
        if (cap > 0)
          CHECK(std::includes(prev.begin(), prev.end(), cur.begin(),
                              cur.end()));
        prev = cur;
      }
    }
  }
}
