#pragma once

#include <utility>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch {

enum class Algo { WPDA, FPDA };

// Round-by-round record of a deferred acceptance run. Cumulative proposal
// sets are tracked per firm under WPDA and per worker under FPDA.
struct ProposalTrace {
  struct Event {
    int round;
    bool rejection;  // false = proposal
    WorkerId worker;
    FirmId firm;

    friend bool operator==(const Event&, const Event&) = default;
  };

  Algo algo = Algo::WPDA;
  int rounds = 0;
  std::vector<Event> events;
  std::vector<std::vector<WorkerId>> proposals_to_firm;   // WPDA, sorted
  std::vector<std::vector<FirmId>> proposals_to_worker;   // FPDA, sorted

  int rejections_by_firm(FirmId f) const {
    int k = 0;
    for (const Event& e : events)
      if (e.rejection && e.firm == f) ++k;
    return k;
  }
};

// Worker-proposing deferred acceptance; returns the worker-optimal stable
// matching. Unmatched workers propose in ascending index order each round.
std::pair<Matching, ProposalTrace> wpda(const Instance& inst);

// Firm-proposing deferred acceptance; returns the firm-optimal stable
// matching. A firm with k free seats issues its next k untried proposals
// in one round.
std::pair<Matching, ProposalTrace> fpda(const Instance& inst);

inline Matching run(const Instance& inst, Algo algo) {
  return algo == Algo::WPDA ? wpda(inst).first : fpda(inst).first;
}

inline std::vector<WorkerId> run_outcome(const Instance& inst, Algo algo,
                                         FirmId f) {
  return run(inst, algo).workers_of(f);
}

}  // namespace capmatch
