#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "capmatch/core.hpp"
#include "capmatch/gen.hpp"
#include "capmatch/io.hpp"
#include "capmatch/oracle.hpp"

// Helpers shared across the test binaries.
namespace support {

using namespace capmatch;

inline io::NamedInstance fx(const std::string& name) {
  return io::load_instance(std::string(CAPMATCH_FIXTURE_DIR) + "/" + name +
                           ".json");
}

inline Instance fixture(const std::string& name) { return fx(name).inst; }

inline Instance with_caps(Instance inst, std::vector<int> caps) {
  inst.capacities = std::move(caps);
  return inst;
}

inline Instance with_extension(Instance inst, ExtensionKind kind) {
  for (auto& e : inst.extensions) e = kind;
  return inst;
}

inline Matching mk_matching(int n_firms, int n_workers,
                            std::initializer_list<std::pair<int, int>> pairs) {
  Matching mu(n_firms, n_workers);
  for (auto [w, f] : pairs) mu.assign(w, f);
  return mu;
}

// Relaxed limits for in-test oracle calls: they stay exhaustive but are not
// throttled by the CLI-facing defaults.
inline oracle::OracleLimits wide_limits() {
  oracle::OracleLimits limits;
  limits.max_workers = 16;
  limits.max_total_capacity = 64;
  limits.max_budget = 16;
  return limits;
}

struct SampleParams {
  int count = 100;
  std::uint64_t seed = 1;
  int max_firms = 4;
  int max_workers = 5;
  int max_cap = 2;
  bool complete = false;
  bool alternate_extension = true;  // otherwise all strongly monotone
};

// Deterministic stream of small random instances, alternating extension
// kinds and sizes.
inline std::vector<Instance> sample_instances(const SampleParams& p) {
  std::vector<Instance> out;
  std::uint64_t state = p.seed;
  for (int i = 0; i < p.count; ++i) {
    gen::GenParams g;
    g.kind = gen::GenParams::Kind::Random;
    g.n_firms = 1 + static_cast<int>(gen::rnd_below(state, p.max_firms));
    g.n_workers = 1 + static_cast<int>(gen::rnd_below(state, p.max_workers));
    g.max_cap = p.max_cap;
    g.seed = gen::rnd_below(state, 1u << 30);
    g.complete = p.complete;
    g.extension = (!p.alternate_extension || i % 2)
                      ? ExtensionKind::StronglyMonotone
                      : ExtensionKind::Lexicographic;
    out.push_back(gen::generate(g));
  }
  return out;
}

inline std::vector<WorkerId> sorted_set(std::vector<WorkerId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace support
