#pragma once

#include <optional>
#include <vector>

#include "dpg/metrics.hpp"
#include "dpg/rational.hpp"

namespace dpg {

/// Social network of players. Undirected edges are stored once and expand
/// symmetrically into each endpoint's neighbour list; directed edges (i,j)
/// make j a neighbour of i only ("players that have edges from i").
class NeighbourhoodGraph {
 public:
  struct Edge {
    int i = 0;
    int j = 0;
    Rational weight = 1;
    bool operator==(const Edge&) const = default;
  };

  NeighbourhoodGraph() = default;
  NeighbourhoodGraph(int players, bool directed, std::vector<Edge> edges);

  int players() const { return players_; }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbours whose strategies enter player i's cost, with edge weights.
  const std::vector<std::pair<int, Rational>>& neighbours(int i) const {
    return neighbours_.at(i);
  }
  int degree(int i) const { return static_cast<int>(neighbours_.at(i).size()); }
  bool unit_weights() const;

  bool operator==(const NeighbourhoodGraph& o) const {
    return players_ == o.players_ && directed_ == o.directed_ && edges_ == o.edges_;
  }

 private:
  int players_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Rational>>> neighbours_;
};

struct StrategyProfile {
  std::vector<int> strategy;
  auto operator<=>(const StrategyProfile&) const = default;
};

/// Discrete preference game in the general form: directed or undirected
/// weighted neighbourhood graph and per-player penalty mass over the points.
/// The single-preferred-strategy form is the special case of one nonzero
/// penalty entry.
struct Game {
  NeighbourhoodGraph graph;
  Metric metric;
  std::vector<std::vector<Rational>> penalties;

  // Set when built through from_alpha_form; costs are the paper's
  // alpha-form costs scaled by alpha's denominator.
  std::optional<Rational> alpha;
  std::optional<std::vector<int>> preferred;

  int points() const { return point_count(metric); }
};

Game make_game(NeighbourhoodGraph graph, Metric metric,
               std::vector<std::vector<Rational>> penalties);

/// Builds the alpha-form game: with alpha = p/q in lowest terms, player i
/// gets penalty p at her preferred point and every edge carries weight q - p,
/// so costs equal the alpha-form costs scaled by q.
Game from_alpha_form(const NeighbourhoodGraph& graph, Metric metric,
                     std::vector<int> preferred, const Rational& alpha);

void check_profile(const Game& game, const StrategyProfile& z);

/// Player i's cost if she plays x while the others keep z.
Rational deviation_cost(const Game& game, const StrategyProfile& z, int i, int x);

/// c_i(z) = sum_v p_i(v) d(v,z_i) + sum_{j in N_i} w_ij d(z_i,z_j).
Rational player_cost(const Game& game, const StrategyProfile& z, int i);

/// Exact potential for undirected games; throws for directed ones.
Rational potential(const Game& game, const StrategyProfile& z);

/// Points minimizing player i's cost against z_{-i}; never empty, ascending.
std::vector<int> best_responses(const Game& game, const StrategyProfile& z, int i);

struct Deviation {
  int player = 0;
  int point = 0;
  Rational delta;  // strictly negative
};

/// First improving deviation in (player, point) order, or nullopt at an
/// equilibrium.
std::optional<Deviation> find_improving_deviation(const Game& game, const StrategyProfile& z);

bool is_equilibrium(const Game& game, const StrategyProfile& z);

}  // namespace dpg
