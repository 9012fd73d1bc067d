#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "capmatch/oracle.hpp"
#include "support.hpp"

using namespace capmatch;
using support::fixture;
using support::mk_matching;
using support::with_caps;

TEST_CASE("stable set enumeration on the worked examples") {
  Instance lp21 = with_caps(fixture("lex_firm_worse"), {2, 1});
  auto stable = oracle::enumerate_stable_matchings(lp21);
  REQUIRE(stable.size() == 2);
  Matching mu2 = mk_matching(2, 3, {{0, 0}, {1, 0}, {2, 1}});
  Matching mu3 = mk_matching(2, 3, {{1, 0}, {2, 0}, {0, 1}});
  CHECK(std::count(stable.begin(), stable.end(), mu2) == 1);
  CHECK(std::count(stable.begin(), stable.end(), mu3) == 1);

  auto unique = oracle::enumerate_stable_matchings(fixture("master_list_2x2"));
  REQUIRE(unique.size() == 1);
  CHECK(unique[0] == mk_matching(2, 2, {{0, 1}}));

  auto empty = oracle::enumerate_stable_matchings(Instance::sized(0, 0));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == Matching(0, 0));
}

TEST_CASE("enumeration is sound and complete") {
  support::SampleParams params;
  params.count = 80;
  params.seed = 201;
  params.max_workers = 4;
  auto limits = support::wide_limits();
  for (const Instance& inst : support::sample_instances(params)) {
    auto stable = oracle::enumerate_stable_matchings(inst, limits);
    std::set<std::vector<int>> seen;
    for (const Matching& mu : stable) {
      CHECK(check_stability(inst, mu).stable);
      CHECK(seen.insert(mu.assignment()).second);  // no duplicates
    }
    // Independent generator: walk every worker->firm map directly.
    int found = 0;
    int total = 1;
    for (int w = 0; w < inst.n_workers; ++w) total *= inst.n_firms + 1;
    for (int code = 0; code < total; ++code) {
      int rest = code;
      Matching mu(inst.n_firms, inst.n_workers);
      bool ok = true;
      for (int w = 0; w < inst.n_workers && ok; ++w) {
        int pick = rest % (inst.n_firms + 1);
        rest /= inst.n_firms + 1;
        if (pick == inst.n_firms) continue;
        if (mu.size_of(pick) >= inst.capacities[pick])
          ok = false;
        else
          mu.assign(w, pick);
      }
      if (!ok) continue;
      if (!check_stability(inst, mu).stable) continue;
      ++found;
      CHECK(seen.count(mu.assignment()) == 1);
    }
    CHECK(found == static_cast<int>(stable.size()));
  }
}

TEST_CASE("limits are enforced") {
  Instance big = Instance::sized(1, 9);
  big.capacities = {1};
  CHECK_THROWS_AS(oracle::enumerate_stable_matchings(big), LimitExceededError);

  Instance heavy = Instance::sized(2, 2);
  heavy.capacities = {8, 8};
  CHECK_THROWS_AS(oracle::enumerate_stable_matchings(heavy),
                  LimitExceededError);

  Instance ok = fixture("lex_firm_worse");
  CHECK_THROWS_AS(
      oracle::brute_force_plan(ok, oracle::PlanObjective::pair(0, 0),
                               oracle::PlanAction::Add,
                               BudgetSpec::unbudgeted(9)),
      LimitExceededError);
}

TEST_CASE("brute force planning mirrors the polynomial answers") {
  Instance lp = fixture("lex_firm_worse");
  PlanResult r = oracle::brute_force_plan(lp, oracle::PlanObjective::pair(1, 0),
                                          oracle::PlanAction::Add,
                                          BudgetSpec::unbudgeted(1));
  REQUIRE(r.feasible);
  CHECK(r.new_caps == std::vector<int>{2, 1});

  // Zero budget with the objective already satisfied keeps the capacities.
  r = oracle::brute_force_plan(lp, oracle::PlanObjective::pair(0, 0),
                               oracle::PlanAction::Add,
                               BudgetSpec::unbudgeted(0));
  REQUIRE(r.feasible);
  CHECK(r.new_caps == lp.capacities);
  CHECK(r.seats_changed == 0);
}

TEST_CASE("brute force peak matches the worked example") {
  CHECK(oracle::brute_force_peak(fixture("peak_vs_proposals"), 0) == 2);
  Instance lonely = Instance::sized(1, 1);
  lonely.capacities = {1};
  CHECK(oracle::brute_force_peak(lonely, 0) == 0);
}

TEST_CASE("rural hospitals holds across every enumerated set") {
  support::SampleParams params;
  params.count = 60;
  params.seed = 207;
  auto limits = support::wide_limits();
  for (const Instance& inst : support::sample_instances(params)) {
    auto stable = oracle::enumerate_stable_matchings(inst, limits);
    REQUIRE_FALSE(stable.empty());
    for (const Matching& mu : stable)
      for (FirmId f = 0; f < inst.n_firms; ++f)
        CHECK(mu.size_of(f) == stable.front().size_of(f));
  }
}
