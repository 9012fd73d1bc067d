#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capmatch/analysis.hpp"
#include "capmatch/canonical.hpp"
#include "capmatch/capmod.hpp"
#include "capmatch/da.hpp"
#include "capmatch/gen.hpp"
#include "capmatch/io.hpp"
#include "capmatch/oracle.hpp"

namespace {

using namespace capmatch;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // infeasible plan / unstable matching
constexpr int kExitUsage = 2;

Algo parse_algo(const std::string& name) {
  if (name == "wpda") return Algo::WPDA;
  if (name == "fpda") return Algo::FPDA;
  throw Error("--algo must be wpda or fpda");
}

struct CapmodArgs {
  std::string instance_path;
  std::vector<std::string> objective;  // ("pair", "w,f") or ("stabilize", path)
  std::string action;
  int budget = 0;
  std::vector<std::string> firm_budgets;  // name=amount
  bool exact = false;
};

std::pair<WorkerId, FirmId> parse_pair(const std::string& text,
                                       const io::NamedInstance& named) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw Error("--objective pair expects \"worker,firm\"");
  WorkerId w = named.worker_id(text.substr(0, comma));
  FirmId f = named.firm_id(text.substr(comma + 1));
  return {w, f};
}

std::optional<std::vector<int>> parse_firm_budgets(
    const std::vector<std::string>& entries, const io::NamedInstance& named) {
  if (entries.empty()) return std::nullopt;
  std::vector<int> budgets(named.inst.n_firms, 0);
  for (const std::string& e : entries) {
    auto eq = e.find('=');
    if (eq == std::string::npos)
      throw Error("--firm-budget expects name=amount");
    FirmId f = named.firm_id(e.substr(0, eq));
    budgets[f] = std::stoi(e.substr(eq + 1));
    if (budgets[f] < 0) throw Error("--firm-budget must be non-negative");
  }
  return budgets;
}

int run_capmod(const CapmodArgs& args) {
  io::NamedInstance named = io::load_instance(args.instance_path);
  if (args.objective.size() != 2)
    throw Error("--objective expects two values: pair w,f | stabilize path");
  const bool add = args.action == "add";
  if (!add && args.action != "delete")
    throw Error("--action must be add or delete");
  if (args.budget < 0) throw Error("--budget must be non-negative");

  BudgetSpec budget;
  budget.global = args.budget;
  budget.per_firm = parse_firm_budgets(args.firm_budgets, named);

  PlanResult result;
  if (args.objective[0] == "pair") {
    auto [w, f] = parse_pair(args.objective[1], named);
    if (args.exact) {
      if (!budget.per_firm)
        throw Error("--exact requires --firm-budget entries");
      result = add ? budgeted_add_match_pair_exact(named.inst, w, f, budget)
                   : budgeted_delete_match_pair_exact(named.inst, w, f, budget);
    } else {
      if (budget.per_firm)
        throw Error(
            "per-firm budgets with a pair objective need --exact (the "
            "budgeted problem has no polynomial planner)");
      result = add ? add_capacity_match_pair(named.inst, w, f, budget.global)
                   : delete_capacity_match_pair(named.inst, w, f,
                                                budget.global);
    }
  } else if (args.objective[0] == "stabilize") {
    if (args.exact) throw Error("--exact applies only to pair objectives");
    Matching target = io::load_matching(args.objective[1], named);
    result = add ? add_capacity_stabilize(named.inst, budget, target)
                 : delete_capacity_stabilize(named.inst, budget, target);
  } else {
    throw Error("--objective must start with pair or stabilize");
  }

  std::cout << io::emit_plan(result, named);
  return result.feasible ? kExitOk : kExitNegative;
}

int run_oracle(const std::string& instance_path, bool enumerate,
               const CapmodArgs& plan_args, bool plan) {
  io::NamedInstance named = io::load_instance(instance_path);
  oracle::OracleLimits limits = oracle::OracleLimits::from_env();
  if (enumerate == plan)
    throw Error("oracle: pass exactly one of --enumerate or --plan");
  if (enumerate) {
    std::cout << io::emit_matching_list(
        oracle::enumerate_stable_matchings(named.inst, limits), named);
    return kExitOk;
  }
  if (plan_args.objective.size() != 2)
    throw Error("--objective expects two values: pair w,f | stabilize path");
  const bool add = plan_args.action == "add";
  if (!add && plan_args.action != "delete")
    throw Error("--action must be add or delete");
  BudgetSpec budget;
  budget.global = plan_args.budget;
  budget.per_firm = parse_firm_budgets(plan_args.firm_budgets, named);
  oracle::PlanObjective objective;
  if (plan_args.objective[0] == "pair") {
    auto [w, f] = parse_pair(plan_args.objective[1], named);
    objective = oracle::PlanObjective::pair(w, f);
  } else if (plan_args.objective[0] == "stabilize") {
    objective = oracle::PlanObjective::stabilize(
        io::load_matching(plan_args.objective[1], named));
  } else {
    throw Error("--objective must start with pair or stabilize");
  }
  PlanResult result = oracle::brute_force_plan(
      named.inst, objective,
      add ? oracle::PlanAction::Add : oracle::PlanAction::Delete, budget,
      limits);
  std::cout << io::emit_plan(result, named);
  return result.feasible ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"many-to-one stable matching toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "run deferred acceptance");
  std::string solve_path, solve_algo = "wpda";
  bool solve_trace = false;
  solve->add_option("instance", solve_path)->required();
  solve->add_option("--algo", solve_algo);
  solve->add_flag("--trace", solve_trace);

  // stability
  auto* stab = app.add_subcommand("stability", "check a matching");
  std::string stab_path, stab_matching;
  stab->add_option("instance", stab_path)->required();
  stab->add_option("--matching", stab_matching)->required();

  // capmod
  auto* capmod = app.add_subcommand("capmod", "plan capacity changes");
  CapmodArgs cm;
  capmod->add_option("instance", cm.instance_path)->required();
  capmod->add_option("--objective", cm.objective)->expected(2)->required();
  capmod->add_option("--action", cm.action)->required();
  capmod->add_option("--budget", cm.budget)->required();
  capmod->add_option("--firm-budget", cm.firm_budgets);
  capmod->add_flag("--exact", cm.exact);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "peak and manipulation report");
  std::string an_path, an_firm, an_algo = "wpda";
  int perm_limit = 8;
  analyze->add_option("instance", an_path)->required();
  analyze->add_option("--firm", an_firm)->required();
  analyze->add_option("--algo", an_algo);
  analyze->add_option("--perm-limit", perm_limit);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  std::string gen_kind = "random", gen_ext = "lex";
  int gen_firms = 0, gen_workers = 0, gen_maxcap = 1;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--kind", gen_kind);
  gen_cmd->add_option("--firms", gen_firms)->required();
  gen_cmd->add_option("--workers", gen_workers)->required();
  gen_cmd->add_option("--max-cap", gen_maxcap);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--extension", gen_ext);

  // oracle
  auto* orc = app.add_subcommand("oracle", "exhaustive verification");
  std::string orc_path;
  bool orc_enumerate = false, orc_plan = false;
  CapmodArgs op;
  orc->add_option("instance", orc_path)->required();
  orc->add_flag("--enumerate", orc_enumerate);
  orc->add_flag("--plan", orc_plan);
  orc->add_option("--objective", op.objective)->expected(2);
  orc->add_option("--action", op.action);
  orc->add_option("--budget", op.budget);
  orc->add_option("--firm-budget", op.firm_budgets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      io::NamedInstance named = io::load_instance(solve_path);
      auto [mu, trace] = parse_algo(solve_algo) == Algo::WPDA
                             ? wpda(named.inst)
                             : fpda(named.inst);
      std::cout << io::emit_matching(mu, named);
      if (solve_trace) std::cout << io::emit_trace(trace, named);
      return kExitOk;
    }
    if (stab->parsed()) {
      io::NamedInstance named = io::load_instance(stab_path);
      Matching mu = io::load_matching(stab_matching, named);
      StabilityReport report = check_stability(named.inst, mu);
      std::cout << io::emit_stability(report, named);
      return report.stable ? kExitOk : kExitNegative;
    }
    if (capmod->parsed()) return run_capmod(cm);
    if (analyze->parsed()) {
      io::NamedInstance named = io::load_instance(an_path);
      FirmId f = named.firm_id(an_firm);
      Algo algo = parse_algo(an_algo);
      auto report =
          analysis::compare_manipulations(named.inst, f, algo, perm_limit);
      std::cout << io::emit_analysis(report.peak, report, named);
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      if (gen_firms <= 0 || gen_workers <= 0 || gen_maxcap < 0)
        throw Error("gen: sizes must be positive");
      gen::GenParams params;
      if (gen_kind == "random")
        params.kind = gen::GenParams::Kind::Random;
      else if (gen_kind == "masterlist")
        params.kind = gen::GenParams::Kind::MasterList;
      else
        throw Error("--kind must be random or masterlist");
      params.n_firms = gen_firms;
      params.n_workers = gen_workers;
      params.max_cap = gen_maxcap;
      params.seed = gen_seed;
      if (gen_ext == "lex")
        params.extension = ExtensionKind::Lexicographic;
      else if (gen_ext == "monotone")
        params.extension = ExtensionKind::StronglyMonotone;
      else
        throw Error("--extension must be lex or monotone");
      std::cout << io::emit_instance(
          io::NamedInstance::with_default_names(gen::generate(params)));
      return kExitOk;
    }
    if (orc->parsed()) return run_oracle(orc_path, orc_enumerate, op, orc_plan);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
