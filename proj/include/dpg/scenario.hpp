#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpg/game.hpp"
#include "dpg/reductions.hpp"

namespace dpg {

/// Player section entry: either a single preferred point (weight mandatory
/// unless the scenario carries alpha) or a full penalty table.
struct PreferredSpec {
  int point = 0;
  std::optional<Rational> weight;
  bool operator==(const PreferredSpec&) const = default;
};
using PlayerSpec = std::variant<PreferredSpec, std::vector<Rational>>;

using MetricSpec = std::variant<MatrixMetric, GraphMetricSpec, TreeMetric, ProductMetric>;

/// Parsed scenario file; retains the authored form (e.g. a graph metric stays
/// a graph metric) so parse -> serialize -> parse is the identity.
struct Scenario {
  std::optional<Rational> alpha;
  NeighbourhoodGraph graph;
  MetricSpec metric;
  std::vector<PlayerSpec> players;

  bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& scenario);

/// Lowers the scenario to a playable game. Matrix metrics are checked against
/// the metric axioms; graph metrics are converted to shortest-path tables.
Game scenario_to_game(const Scenario& scenario);

/// Scenario equivalent to an in-memory game (used when emitting generated
/// games, e.g. reduction artifacts). Single-point penalty tables are folded
/// back into preferred-strategy entries.
Scenario scenario_from_game(const Game& game);

MaxCutInstance parse_maxcut(const std::string& json_text);
std::string serialize_maxcut(const MaxCutInstance& inst);

StrategyProfile parse_profile(const std::string& json_text);
std::string serialize_profile(const StrategyProfile& profile);

/// Sidecar solution map emitted next to a reduced scenario.
std::string serialize_reduction_map(const ReductionArtifact& artifact);

std::string graph_to_dot(const NeighbourhoodGraph& graph);
std::string metric_to_dot(const Metric& metric);

}  // namespace dpg
