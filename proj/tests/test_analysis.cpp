#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "capmatch/analysis.hpp"
#include "capmatch/da.hpp"
#include "invariants.hpp"
#include "support.hpp"

using namespace capmatch;
using namespace capmatch::analysis;
using support::fixture;
using support::with_caps;
using support::with_extension;

TEST_CASE("peak values on the worked examples") {
  CHECK(peak(fixture("peak_vs_proposals"), 0).peak == 2);
  CHECK(peak(fixture("master_list_2x5"), 0).peak == 5);

  Instance lonely = Instance::sized(2, 2);
  lonely.capacities = {1, 1};
  lonely.firm_prefs[0].ranked = {0, 1};
  CHECK(peak(lonely, 0).peak == 0);  // nobody lists the firm

  Instance lp21 = with_caps(fixture("lex_firm_worse"), {2, 1});
  PeakReport pr = peak(lp21, 0);
  CHECK(pr.peak == 2);
  CHECK(pr.regime == Regime::AtPeak);
  CHECK(pr.at_peak_wosm_set == std::vector<WorkerId>{1, 2});
}

TEST_CASE("best capacity increase") {
  Instance ml5 = fixture("master_list_2x5");
  for (Algo algo : {Algo::WPDA, Algo::FPDA}) {
    // Growing to three seats already gives the next worker down the list.
    CHECK(run_outcome(ml5.with_capacity(0, 3), algo, 0) ==
          std::vector<WorkerId>{0, 1, 2});
    auto best = best_add(ml5, 0, algo);
    REQUIRE(best.has_value());
    CHECK(compare_sets(ml5, 0, best->outcome, run_outcome(ml5, algo, 0)) ==
          SetOrder::Better);
  }

  // At or above peak the search range is empty.
  CHECK_FALSE(best_add(with_caps(fixture("lex_firm_worse"), {2, 1}), 0,
                       Algo::WPDA)
                  .has_value());

  // Strongly monotone firm below peak: two seats beat one good worker.
  Instance lp_sm =
      with_extension(fixture("lex_firm_worse"), ExtensionKind::StronglyMonotone);
  auto best = best_add(lp_sm, 0, Algo::WPDA);
  REQUIRE(best.has_value());
  CHECK(best->capacity == 2);
  CHECK(best->outcome == std::vector<WorkerId>{1, 2});
}

TEST_CASE("best capacity decrease") {
  Instance lp21 = with_caps(fixture("lex_firm_worse"), {2, 1});
  auto best = best_delete(lp21, 0, Algo::WPDA);
  REQUIRE(best.has_value());
  CHECK(best->capacity == 1);
  CHECK(best->outcome == std::vector<WorkerId>{0});

  Instance smdel = fixture("monotone_delete_above");
  auto fbest = best_delete(smdel, 0, Algo::FPDA);
  REQUIRE(fbest.has_value());
  CHECK(fbest->capacity == 2);
  CHECK(fbest->outcome == std::vector<WorkerId>{0, 1});

  // Strongly monotone at or below peak: deleting never helps when workers
  // propose.
  CHECK_FALSE(best_delete(with_extension(lp21, ExtensionKind::StronglyMonotone),
                          0, Algo::WPDA)
                  .has_value());
}

TEST_CASE("best preference misreport") {
  Instance below = fixture("wpda_pref_below");
  auto best = best_pref(below, 0, Algo::WPDA);
  REQUIRE(best.has_value());
  CHECK(best->outcome == std::vector<WorkerId>{3});  // {w4}
  // The report the discussion uses also lands on {w4}.
  Instance misreport = below;
  misreport.firm_prefs[0].ranked = {3, 1, 2, 0};  // w4 > w2 > w3 > w1
  CHECK(run_outcome(misreport, Algo::WPDA, 0) == std::vector<WorkerId>{3});

  Instance at_peak = fixture("pref_at_peak");
  auto fbest = best_pref(at_peak, 0, Algo::FPDA);
  REQUIRE(fbest.has_value());
  CHECK(fbest->outcome == std::vector<WorkerId>{0, 3});  // {w1, w4}
  Instance swap = at_peak;
  swap.firm_prefs[0].ranked = {0, 3, 1, 2};  // w1 > w4 > w2 > w3
  CHECK(run_outcome(swap, Algo::FPDA, 0) == std::vector<WorkerId>{0, 3});

  // Above peak no permutation moves the outcome, under either algorithm.
  Instance lp31 = with_caps(fixture("lex_firm_worse"), {3, 1});
  CHECK_FALSE(best_pref(lp31, 0, Algo::WPDA).has_value());
  CHECK_FALSE(best_pref(lp31, 0, Algo::FPDA).has_value());

  CHECK_THROWS_AS(best_pref(fixture("master_list_2x5"), 0, Algo::WPDA, 4),
                  PermLimitError);
}

TEST_CASE("manipulation comparison on the at-peak example") {
  Instance lp21 = with_caps(fixture("lex_firm_worse"), {2, 1});
  ManipulationReport rep = compare_manipulations(lp21, 0, Algo::WPDA);
  CHECK(rep.peak.regime == Regime::AtPeak);
  CHECK(rep.truthful == std::vector<WorkerId>{1, 2});
  CHECK_FALSE(rep.add.has_value());
  CHECK_FALSE(rep.pref.has_value());
  REQUIRE(rep.del.has_value());
  auto beats = [&](Action x, Action y) {
    return rep.beats[static_cast<int>(x)][static_cast<int>(y)];
  };
  CHECK(beats(Action::Delete, Action::Pref));
  CHECK(beats(Action::Delete, Action::Add));
  CHECK_FALSE(beats(Action::Pref, Action::Delete));
  CHECK_FALSE(beats(Action::Add, Action::Delete));
  CHECK_FALSE(beats(Action::Add, Action::Pref));
  CHECK_FALSE(beats(Action::Pref, Action::Add));
}

TEST_CASE("manipulation comparison below peak") {
  Instance below = fixture("wpda_delete_below");
  ManipulationReport rep = compare_manipulations(below, 0, Algo::WPDA);
  CHECK(rep.peak.regime == Regime::BelowPeak);
  CHECK(rep.truthful == std::vector<WorkerId>{1, 2});
  REQUIRE(rep.del.has_value());
  CHECK(rep.del->outcome == std::vector<WorkerId>{0});
  CHECK_FALSE(rep.pref.has_value());
  // Growing to the peak picks up one more listed worker, which counts as a
  // lexicographic gain but stays behind the delete outcome.
  REQUIRE(rep.add.has_value());
  CHECK(rep.add->outcome == std::vector<WorkerId>{1, 2, 3});
  auto beats = [&](Action x, Action y) {
    return rep.beats[static_cast<int>(x)][static_cast<int>(y)];
  };
  CHECK(beats(Action::Delete, Action::Pref));
  CHECK(beats(Action::Delete, Action::Add));
  CHECK(beats(Action::Add, Action::Pref));
  CHECK_FALSE(beats(Action::Pref, Action::Delete));
  CHECK_FALSE(beats(Action::Pref, Action::Add));
}

TEST_CASE("manipulation comparison with nothing to gain") {
  Instance lonely = Instance::sized(1, 1);
  lonely.capacities = {1};
  ManipulationReport rep = compare_manipulations(lonely, 0, Algo::WPDA);
  CHECK_FALSE(rep.add.has_value());
  CHECK_FALSE(rep.del.has_value());
  CHECK_FALSE(rep.pref.has_value());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK_FALSE(rep.beats[x][y]);
}

TEST_CASE("one extra seat: who gains, who loses") {
  Instance ml = fixture("master_list_2x2");
  WorkerEffectReport rep = worker_effect_report(ml, 0);
  for (const auto* side : {&rep.wosm, &rep.fosm}) {
    CHECK(side->worker_change[0] == Cmp::Better);
    CHECK(side->worker_change[1] == Cmp::Better);
  }

  Instance lp = fixture("lex_firm_worse");
  WorkerEffectReport rep2 = worker_effect_report(lp, 0);
  CHECK(rep2.wosm.worker_change[0] == Cmp::Better);  // w1 rises to f2
  CHECK(rep2.wosm.after.firm_of(0) == 1);
  CHECK(rep2.fosm.firm_seat_change[1] ==
        std::vector<Cmp>{Cmp::Equal});  // f2 keeps w3 when firms propose

  // A firm already above peak gains nothing and changes nothing.
  Instance lp31 = with_caps(lp, {3, 1});
  WorkerEffectReport rep3 = worker_effect_report(lp31, 0);
  for (const auto* side : {&rep3.wosm, &rep3.fosm}) {
    for (Cmp c : side->worker_change) CHECK(c == Cmp::Equal);
    for (const auto& seats : side->firm_seat_change)
      for (Cmp c : seats) CHECK(c == Cmp::Equal);
  }
}

TEST_CASE("analysis invariants on random instances") {
  invariants::peak_oracle_equivalence(60, 101);
  invariants::peak_zero_rejections(80, 102);
  invariants::above_peak_set_freeze(50, 103);
  invariants::pref_useless_at_or_above_peak(40, 104);
  invariants::worker_never_worse_plus_one(80, 105);
  invariants::monotone_firm_never_worse_wpda(80, 106);
  invariants::add_useless_at_or_above_peak(60, 107);
  invariants::monotone_delete_useless_wpda(60, 108);
  invariants::fpda_above_peak_delete_iff(60, 109);
}
