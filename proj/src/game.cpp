#include "dpg/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace dpg {

NeighbourhoodGraph::NeighbourhoodGraph(int players, bool directed, std::vector<Edge> edges)
    : players_(players), directed_(directed), edges_(std::move(edges)) {
  if (players_ < 0) throw std::invalid_argument("player count must be nonnegative");
  neighbours_.assign(players_, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.i < 0 || e.i >= players_ || e.j < 0 || e.j >= players_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.i == e.j) throw std::invalid_argument("self-loops are not allowed");
    if (e.weight <= 0) throw std::invalid_argument("edge weights must be positive");
    auto key = directed_ ? std::pair{e.i, e.j} : std::pair{std::min(e.i, e.j), std::max(e.i, e.j)};
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
    neighbours_[e.i].emplace_back(e.j, e.weight);
    if (!directed_) neighbours_[e.j].emplace_back(e.i, e.weight);
  }
}

bool NeighbourhoodGraph::unit_weights() const {
  for (const auto& e : edges_) {
    if (e.weight != 1) return false;
  }
  return true;
}

Game make_game(NeighbourhoodGraph graph, Metric metric,
               std::vector<std::vector<Rational>> penalties) {
  const int p = point_count(metric);
  if (static_cast<int>(penalties.size()) != graph.players()) {
    throw std::invalid_argument("one penalty table per player required");
  }
  for (const auto& table : penalties) {
    if (static_cast<int>(table.size()) != p) {
      throw std::invalid_argument("penalty table must have one entry per point");
    }
    for (const auto& w : table) {
      if (w < 0) throw std::invalid_argument("penalties must be nonnegative");
    }
  }
  return Game{std::move(graph), std::move(metric), std::move(penalties), std::nullopt,
              std::nullopt};
}

Game from_alpha_form(const NeighbourhoodGraph& graph, Metric metric, std::vector<int> preferred,
                     const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in [0,1)");
  if (!graph.unit_weights()) throw std::invalid_argument("alpha form requires unit edge weights");
  if (static_cast<int>(preferred.size()) != graph.players()) {
    throw std::invalid_argument("one preferred point per player required");
  }
  const int p = point_count(metric);
  const Int num = numerator(alpha);
  const Int den = denominator(alpha);
  const Rational edge_weight = Rational(den - num);

  std::vector<NeighbourhoodGraph::Edge> edges;
  edges.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) edges.push_back({e.i, e.j, edge_weight});

  std::vector<std::vector<Rational>> penalties(graph.players(), std::vector<Rational>(p, 0));
  for (int i = 0; i < graph.players(); ++i) {
    if (preferred[i] < 0 || preferred[i] >= p) {
      throw std::invalid_argument("preferred point out of range");
    }
    penalties[i][preferred[i]] = Rational(num);
  }

  Game game = make_game(NeighbourhoodGraph(graph.players(), graph.directed(), std::move(edges)),
                        std::move(metric), std::move(penalties));
  game.alpha = alpha;
  game.preferred = std::move(preferred);
  return game;
}

void check_profile(const Game& game, const StrategyProfile& z) {
  if (static_cast<int>(z.strategy.size()) != game.graph.players()) {
    throw std::invalid_argument("profile length does not match player count");
  }
  const int p = game.points();
  for (int s : z.strategy) {
    if (s < 0 || s >= p) throw std::out_of_range("profile strategy out of range");
  }
}

Rational deviation_cost(const Game& game, const StrategyProfile& z, int i, int x) {
  Rational cost = 0;
  const auto& pen = game.penalties[i];
  for (int v = 0; v < static_cast<int>(pen.size()); ++v) {
    if (pen[v] != 0) cost += pen[v] * distance(game.metric, v, x);
  }
  for (const auto& [j, w] : game.graph.neighbours(i)) {
    cost += w * distance(game.metric, x, z.strategy[j]);
  }
  return cost;
}

Rational player_cost(const Game& game, const StrategyProfile& z, int i) {
  check_profile(game, z);
  return deviation_cost(game, z, i, z.strategy[i]);
}

Rational potential(const Game& game, const StrategyProfile& z) {
  if (game.graph.directed()) {
    throw std::domain_error("potential undefined for directed games");
  }
  check_profile(game, z);
  Rational phi = 0;
  for (int i = 0; i < game.graph.players(); ++i) {
    const auto& pen = game.penalties[i];
    for (int v = 0; v < static_cast<int>(pen.size()); ++v) {
      if (pen[v] != 0) phi += pen[v] * distance(game.metric, v, z.strategy[i]);
    }
  }
  for (const auto& e : game.graph.edges()) {
    phi += e.weight * distance(game.metric, z.strategy[e.i], z.strategy[e.j]);
  }
  return phi;
}

std::vector<int> best_responses(const Game& game, const StrategyProfile& z, int i) {
  check_profile(game, z);
  std::vector<int> best;
  Rational best_cost;
  for (int x = 0; x < game.points(); ++x) {
    Rational c = deviation_cost(game, z, i, x);
    if (best.empty() || c < best_cost) {
      best_cost = c;
      best.assign(1, x);
    } else if (c == best_cost) {
      best.push_back(x);
    }
  }
  return best;
}

std::optional<Deviation> find_improving_deviation(const Game& game, const StrategyProfile& z) {
  check_profile(game, z);
  for (int i = 0; i < game.graph.players(); ++i) {
    const Rational current = deviation_cost(game, z, i, z.strategy[i]);
    for (int x = 0; x < game.points(); ++x) {
      if (x == z.strategy[i]) continue;
      Rational c = deviation_cost(game, z, i, x);
      if (c < current) return Deviation{i, x, c - current};
    }
  }
  return std::nullopt;
}

bool is_equilibrium(const Game& game, const StrategyProfile& z) {
  return !find_improving_deviation(game, z).has_value();
}

}  // namespace dpg
