#include "capmatch/canonical.hpp"

namespace capmatch {

std::pair<Instance, CopyMap> to_one_to_one_with_copies(
    const Instance& inst, const std::vector<int>& copies) {
  CopyMap map;
  map.firm_copies.assign(inst.n_firms, {});
  for (FirmId f = 0; f < inst.n_firms; ++f)
    for (int i = 0; i < copies[f]; ++i) {
      map.firm_copies[f].push_back(map.n_men());
      map.firm_of_man.push_back(f);
      map.copy_index.push_back(i);
    }

  Instance one = Instance::sized(map.n_men(), inst.n_workers);
  one.capacities.assign(map.n_men(), 1);
  for (int p = 0; p < map.n_men(); ++p)
    one.firm_prefs[p] = inst.firm_prefs[map.firm_of_man[p]];
  for (WorkerId w = 0; w < inst.n_workers; ++w) {
    auto& list = one.worker_prefs[w].ranked;
    for (FirmId f : inst.worker_prefs[w].ranked)
      for (int p : map.firm_copies[f]) list.push_back(p);
  }
  return {std::move(one), std::move(map)};
}

std::pair<Instance, CopyMap> to_one_to_one(const Instance& inst) {
  return to_one_to_one_with_copies(inst, inst.capacities);
}

Matching compress_matching(const CopyMap& map, const Matching& one_to_one) {
  Matching mu(static_cast<int>(map.firm_copies.size()),
              one_to_one.n_workers());
  for (WorkerId w = 0; w < one_to_one.n_workers(); ++w) {
    int p = one_to_one.firm_of(w);
    if (p != Matching::kUnmatched) mu.assign(w, map.firm_of_man[p]);
  }
  return mu;
}

Matching expand_matching(const Instance& orig, const CopyMap& map,
                         const Matching& mu) {
  Matching one(map.n_men(), mu.n_workers());
  for (FirmId f = 0; f < orig.n_firms; ++f) {
    std::vector<WorkerId> matched = mu.workers_of(f);
    if (static_cast<int>(matched.size()) >
        static_cast<int>(map.firm_copies[f].size()))
      throw InfeasibleMatchingError("expand: firm holds more workers than copies");
    std::sort(matched.begin(), matched.end(), [&](WorkerId a, WorkerId b) {
      return orig.firm_prefs[f].prefers(a, b);
    });
    for (std::size_t i = 0; i < matched.size(); ++i)
      one.assign(matched[i], map.firm_copies[f][i]);
  }
  return one;
}

}  // namespace capmatch
