#pragma once

#include <utility>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch {

// Bookkeeping for the one-to-one reduction: which man plays which copy of
// which firm. Women ids coincide with the original worker ids.
struct CopyMap {
  std::vector<std::vector<int>> firm_copies;  // original firm -> man ids
  std::vector<FirmId> firm_of_man;
  std::vector<int> copy_index;  // 0-based ordinal within the firm

  int n_men() const { return static_cast<int>(firm_of_man.size()); }
};

// Replace each firm by `copies[f]` unit-capacity men. Every man mirrors the
// firm's list over the women; every woman ranks all copies of a preferred
// firm above all copies of a less preferred one, first copy first.
std::pair<Instance, CopyMap> to_one_to_one_with_copies(
    const Instance& inst, const std::vector<int>& copies);

// Standard reduction: one copy per seat.
std::pair<Instance, CopyMap> to_one_to_one(const Instance& inst);

// Collapse a one-to-one matching back onto the original firms.
Matching compress_matching(const CopyMap& map, const Matching& one_to_one);

// Expand a many-to-one matching onto the copies: the firm's most preferred
// matched worker goes to its first copy, and so on down the list. Defined
// for unstable matchings too; stability claims only need the stable case.
Matching expand_matching(const Instance& orig, const CopyMap& map,
                         const Matching& mu);

}  // namespace capmatch
