// Command-line front end: solve, check, enumerate, reduce,
// demo-counterexample. Exit codes: 0 solved/equilibrium, 1 error or
// non-equilibrium, 2 step limit, 3 best-response cycle, 4 no equilibrium.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dpg/dynamics.hpp"
#include "dpg/oracle.hpp"
#include "dpg/reductions.hpp"
#include "dpg/scenario.hpp"
#include "dpg/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitStepLimit = 2;
constexpr int kExitCycle = 3;
constexpr int kExitNoEquilibrium = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string profile_line(const dpg::StrategyProfile& z) {
  std::ostringstream out;
  for (std::size_t i = 0; i < z.strategy.size(); ++i) {
    if (i) out << ' ';
    out << z.strategy[i];
  }
  return out.str();
}

int cmd_solve(const std::string& input, const std::string& algo, const std::string& scheduler,
              std::uint64_t seed, std::int64_t max_steps, const std::string& trace_path,
              const std::string& output) {
  dpg::Scenario scenario = dpg::parse_scenario(read_file(input));
  dpg::Game game = dpg::scenario_to_game(scenario);

  dpg::StrategyProfile profile;
  int exit_code = kExitOk;
  std::string outcome = "solved";
  std::size_t iterations = 0;
  std::vector<std::size_t> factor_iterations;
  dpg::Trace trace;

  if (algo == "tree") {
    auto report = dpg::tree_metric_algo(game);
    profile = report.profile;
    iterations = report.loop_iterations;
  } else if (algo == "product") {
    auto report = dpg::product_metric_algo(game);
    profile = report.profile;
    iterations = report.loop_iterations;
    factor_iterations = report.factor_iterations;
  } else if (algo == "consensus") {
    profile = dpg::consensus_equilibrium(game);
  } else if (algo == "brd") {
    dpg::StrategyProfile start;
    start.strategy.assign(game.graph.players(), 0);
    std::size_t steps = max_steps >= 0 ? static_cast<std::size_t>(max_steps)
                                       : dpg::default_max_steps(game);
    auto result = dpg::run_brd(game, start, dpg::parse_scheduler(scheduler, seed), steps);
    profile = result.profile;
    trace = result.trace;
    iterations = trace.steps.size();
    switch (trace.outcome) {
      case dpg::Outcome::Converged:
        outcome = "converged";
        break;
      case dpg::Outcome::StepLimit:
        outcome = "step-limit";
        exit_code = kExitStepLimit;
        break;
      case dpg::Outcome::Cycle:
        outcome = "cycle";
        exit_code = kExitCycle;
        break;
    }
  } else {
    throw std::runtime_error("unknown algorithm '" + algo + "'");
  }

  std::cout << "algo: " << algo << "\noutcome: " << outcome << "\niterations: " << iterations
            << "\n";
  for (std::size_t t = 0; t < factor_iterations.size(); ++t) {
    std::cout << "factor " << t << " iterations: " << factor_iterations[t] << "\n";
  }
  if (trace.cycle_start) {
    std::cout << "cycle start: " << *trace.cycle_start << "\ncycle period: " << *trace.cycle_period
              << "\n";
  }
  std::cout << "profile: " << profile_line(profile) << "\n";

  if (!trace_path.empty()) write_file(trace_path, dpg::trace_to_csv(trace));
  if (!output.empty()) write_file(output, dpg::serialize_profile(profile));
  return exit_code;
}

int cmd_check(const std::string& input, const std::string& profile_path) {
  dpg::Game game = dpg::scenario_to_game(dpg::parse_scenario(read_file(input)));
  dpg::StrategyProfile z = dpg::parse_profile(read_file(profile_path));
  auto deviation = dpg::find_improving_deviation(game, z);
  if (!deviation) {
    std::cout << "equilibrium\n";
    return kExitOk;
  }
  std::cout << "improving deviation: player " << deviation->player << " -> point "
            << deviation->point << " (delta " << dpg::to_string(deviation->delta) << ")\n";
  return kExitError;
}

int cmd_enumerate(const std::string& input, std::uint64_t max_profiles,
                  const std::string& output) {
  dpg::Game game = dpg::scenario_to_game(dpg::parse_scenario(read_file(input)));
  auto equilibria = dpg::enumerate_equilibria(game, dpg::EnumerationBudget{max_profiles});
  std::ostringstream out;
  for (const auto& z : equilibria) out << profile_line(z) << "\n";
  if (output.empty()) {
    std::cout << out.str();
  } else {
    write_file(output, out.str());
  }
  std::cerr << equilibria.size() << " equilibria\n";
  return equilibria.empty() ? kExitNoEquilibrium : kExitOk;
}

int cmd_reduce(const std::string& input, const std::string& variant, const std::string& alpha_str,
               const std::string& output, const std::string& project_path) {
  dpg::MaxCutInstance inst = dpg::parse_maxcut(read_file(input));
  dpg::ReductionArtifact artifact;
  if (variant == "unweighted") {
    if (alpha_str.empty()) throw std::runtime_error("unweighted variant requires --alpha");
    artifact = dpg::reduce_unweighted(inst, dpg::parse_rational(alpha_str));
  } else if (variant == "weighted") {
    artifact = dpg::reduce_weighted(inst);
  } else {
    throw std::runtime_error("unknown variant '" + variant + "'");
  }

  if (!project_path.empty()) {
    dpg::StrategyProfile z = dpg::parse_profile(read_file(project_path));
    auto cut = dpg::project_profile(artifact, z);
    if (!cut) {
      std::cerr << "profile does not project: some cut player is off her two mapped points\n";
      return kExitError;
    }
    std::string sides;
    for (int s : cut->side) sides += s == 0 ? 'A' : 'B';
    std::cout << "cut: " << sides << "\n"
              << "local max-cut: " << (dpg::is_local_maxcut(inst, *cut) ? "yes" : "no") << "\n";
    return kExitOk;
  }

  if (output.empty()) throw std::runtime_error("reduce requires --output");
  write_file(output, dpg::serialize_scenario(dpg::scenario_from_game(artifact.game)));
  write_file(output + ".map.json", dpg::serialize_reduction_map(artifact));
  std::cout << "players: " << artifact.game.graph.players()
            << "\npoints: " << artifact.game.points() << "\nW: " << dpg::to_string(artifact.W)
            << "\n";
  return kExitOk;
}

int cmd_demo_counterexample(const std::string& dir) {
  std::filesystem::create_directories(dir);
  dpg::Game game = dpg::build_directed_counterexample();
  write_file(dir + "/scenario.json", dpg::serialize_scenario(dpg::scenario_from_game(game)));

  dpg::StrategyProfile start;
  start.strategy.assign(game.graph.players(), 0);
  auto result = dpg::run_brd(game, start, {dpg::SchedulerPolicy::RoundRobin, 0});
  write_file(dir + "/trace.csv", dpg::trace_to_csv(result.trace));
  write_file(dir + "/graph.dot", dpg::graph_to_dot(game.graph));
  write_file(dir + "/metric.dot", dpg::metric_to_dot(game.metric));

  std::cout << "wrote scenario.json, trace.csv, graph.dot, metric.dot to " << dir << "\n"
            << "trace outcome: "
            << (result.trace.outcome == dpg::Outcome::Cycle ? "cycle" : "other") << "\n";
  return result.trace.outcome == dpg::Outcome::Cycle ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete preference games: solvers, dynamics, reductions, oracles"};
  app.require_subcommand(1);

  std::string input, output, trace_path, profile_path, algo = "brd";
  std::string scheduler = "round-robin", variant = "unweighted", alpha, project;
  std::uint64_t seed = 0, budget = 2'000'000;
  std::int64_t max_steps = -1;

  auto* solve = app.add_subcommand("solve", "Compute an equilibrium");
  solve->add_option("--input", input, "Scenario file")->required();
  solve->add_option("--algo", algo, "tree | product | brd | consensus");
  solve->add_option("--scheduler", scheduler, "round-robin | random | max-gain");
  solve->add_option("--seed", seed, "Seed for the random scheduler");
  solve->add_option("--max-steps", max_steps, "BRD step cap (default players*points*1000)");
  solve->add_option("--trace", trace_path, "Write the BRD trace CSV here");
  solve->add_option("--output", output, "Write the profile JSON here");

  auto* check = app.add_subcommand("check", "Check a profile for equilibrium");
  check->add_option("--input", input, "Scenario file")->required();
  check->add_option("--profile", profile_path, "Profile file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all equilibria");
  enumerate->add_option("--input", input, "Scenario file")->required();
  enumerate->add_option("--budget", budget, "Profile enumeration cap");
  enumerate->add_option("--output", output, "Write profiles here instead of stdout");

  auto* reduce = app.add_subcommand("reduce", "Reduce a local max-cut instance");
  reduce->add_option("--input", input, "Max-cut instance file")->required();
  reduce->add_option("--variant", variant, "unweighted | weighted");
  reduce->add_option("--alpha", alpha, "Alpha for the unweighted variant (1/2 < alpha < 1)");
  reduce->add_option("--output", output, "Scenario output path (sidecar map at <path>.map.json)");
  reduce->add_option("--project", project, "Project this profile back to a cut");

  auto* demo = app.add_subcommand("demo-counterexample",
                                  "Emit the 33-player directed game with no equilibrium");
  demo->add_option("--output", output, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return cmd_solve(input, algo, scheduler, seed, max_steps, trace_path, output);
    }
    if (check->parsed()) return cmd_check(input, profile_path);
    if (enumerate->parsed()) return cmd_enumerate(input, budget, output);
    if (reduce->parsed()) return cmd_reduce(input, variant, alpha, output, project);
    if (demo->parsed()) return cmd_demo_counterexample(output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
