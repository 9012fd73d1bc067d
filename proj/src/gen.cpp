#include "capmatch/gen.hpp"

#include <numeric>

namespace capmatch::gen {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<int> shuffled_ids(std::uint64_t& state, int count) {
  std::vector<int> ids(count);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = count - 1; i > 0; --i)
    std::swap(ids[i], ids[rnd_below(state, i + 1)]);
  return ids;
}

}  // namespace

std::uint64_t rnd_below(std::uint64_t& state, std::uint64_t bound) {
  return bound == 0 ? 0 : splitmix64(state) % bound;
}

Instance generate(const GenParams& params) {
  Instance inst = Instance::sized(params.n_firms, params.n_workers);
  inst.extensions.assign(params.n_firms, params.extension);
  std::uint64_t state = params.seed;

  if (params.kind == GenParams::Kind::MasterList) {
    inst.capacities.assign(params.n_firms, params.max_cap);
    std::vector<int> firm_order = shuffled_ids(state, params.n_firms);
    std::vector<int> worker_order = shuffled_ids(state, params.n_workers);
    for (auto& p : inst.worker_prefs) p.ranked = firm_order;
    for (auto& p : inst.firm_prefs) p.ranked = worker_order;
    return inst;
  }

  for (int& c : inst.capacities)
    c = static_cast<int>(rnd_below(state, params.max_cap + 1));
  for (auto& p : inst.firm_prefs) {
    p.ranked = shuffled_ids(state, params.n_workers);
    if (!params.complete)
      p.ranked.resize(rnd_below(state, params.n_workers + 1));
  }
  for (auto& p : inst.worker_prefs) {
    p.ranked = shuffled_ids(state, params.n_firms);
    if (!params.complete)
      p.ranked.resize(rnd_below(state, params.n_firms + 1));
  }
  return inst;
}

}  // namespace capmatch::gen
