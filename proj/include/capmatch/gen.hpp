#pragma once

#include <cstdint>

#include "capmatch/core.hpp"

namespace capmatch::gen {

// Deterministic instance generators. The random kind draws an independent
// uniform permutation plus a uniform acceptability cutoff per agent; the
// master-list kind gives every agent on a side the same complete list.
struct GenParams {
  enum class Kind { Random, MasterList };

  Kind kind = Kind::Random;
  int n_firms = 2;
  int n_workers = 3;
  int max_cap = 1;
  std::uint64_t seed = 0;
  ExtensionKind extension = ExtensionKind::Lexicographic;
  bool complete = false;  // random kind: skip the acceptability cutoff
};

Instance generate(const GenParams& params);

// Small deterministic helpers shared with the test generators. Plain
// modulo draws keep the byte stream identical across standard libraries.
std::uint64_t rnd_below(std::uint64_t& state, std::uint64_t bound);

}  // namespace capmatch::gen
