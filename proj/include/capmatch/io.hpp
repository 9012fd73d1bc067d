#pragma once

#include <string>
#include <vector>

#include "capmatch/analysis.hpp"
#include "capmatch/capmod.hpp"
#include "capmatch/core.hpp"
#include "capmatch/da.hpp"

namespace capmatch::io {

// An instance together with the agent names used in its JSON form and an
// optional label echoed back in reports.
struct NamedInstance {
  Instance inst;
  std::string name;
  std::vector<std::string> firm_names;
  std::vector<std::string> worker_names;

  FirmId firm_id(const std::string& name) const;
  WorkerId worker_id(const std::string& name) const;

  // Default names f1.., w1.. for instances built in code.
  static NamedInstance with_default_names(Instance inst,
                                          std::string label = "");
};

// Instance files: {"firms":[{"name","capacity","prefs","extension"}],
// "workers":[{"name","prefs"}]} with an optional top-level "name".
// Parse errors and invariant violations throw Error with a line-anchored
// message where the position is known.
NamedInstance parse_instance(const std::string& text);
NamedInstance load_instance(const std::string& path);
std::string emit_instance(const NamedInstance& named);

// Matching files: {"assignments":[{"worker","firm"}]}; absent workers are
// unmatched.
Matching parse_matching(const std::string& text, const NamedInstance& named);
Matching load_matching(const std::string& path, const NamedInstance& named);
std::string emit_matching(const Matching& mu, const NamedInstance& named);

std::string emit_stability(const StabilityReport& report,
                           const NamedInstance& named);
std::string emit_plan(const PlanResult& result, const NamedInstance& named);
std::string emit_trace(const ProposalTrace& trace, const NamedInstance& named);
std::string emit_analysis(const analysis::PeakReport& peak,
                          const analysis::ManipulationReport& manip,
                          const NamedInstance& named);
std::string emit_matching_list(const std::vector<Matching>& mus,
                               const NamedInstance& named);

}  // namespace capmatch::io
