#include "dpg/oracle.hpp"

#include <algorithm>

namespace dpg {

namespace {

// Enumeration works in integers: every weight, penalty and distance is scaled
// by the common denominator, which preserves all cost comparisons and avoids
// rational normalization in the inner loop.
struct ScaledGame {
  int players = 0;
  int points = 0;
  std::vector<std::vector<Int>> dist;       // scale * d
  std::vector<std::vector<Int>> pen_cost;   // scale^2 * penalty cost of (i, x)
  std::vector<std::vector<std::pair<int, Int>>> neighbours;  // weights at scale
  std::vector<NeighbourhoodGraph::Edge> edges;
  std::vector<Int> edge_weight;             // scale * w, aligned with edges

  explicit ScaledGame(const Game& game) {
    players = game.graph.players();
    points = game.points();

    Int scale = 1;
    MatrixMetric matrix = to_matrix(game.metric);
    for (const auto& row : matrix.dist) {
      for (const auto& d : row) scale = lcm(scale, denominator(d));
    }
    for (const auto& table : game.penalties) {
      for (const auto& p : table) scale = lcm(scale, denominator(p));
    }
    for (const auto& e : game.graph.edges()) scale = lcm(scale, denominator(e.weight));

    auto scaled = [&](const Rational& q) { return Int(numerator(q) * (scale / denominator(q))); };

    dist.assign(points, std::vector<Int>(points));
    for (int x = 0; x < points; ++x) {
      for (int y = 0; y < points; ++y) dist[x][y] = scaled(matrix.dist[x][y]);
    }
    pen_cost.assign(players, std::vector<Int>(points, Int(0)));
    for (int i = 0; i < players; ++i) {
      for (int v = 0; v < points; ++v) {
        if (game.penalties[i][v] == 0) continue;
        Int p = scaled(game.penalties[i][v]);
        for (int x = 0; x < points; ++x) pen_cost[i][x] += p * dist[v][x];
      }
    }
    neighbours.assign(players, {});
    for (int i = 0; i < players; ++i) {
      for (const auto& [j, w] : game.graph.neighbours(i)) {
        neighbours[i].emplace_back(j, scaled(w));
      }
    }
    edges = game.graph.edges();
    for (const auto& e : edges) edge_weight.push_back(scaled(e.weight));
    scale_squared = scale * scale;
  }

  Int cost(const std::vector<int>& z, int i, int x) const {
    Int c = pen_cost[i][x];
    for (const auto& [j, w] : neighbours[i]) c += w * dist[x][z[j]];
    return c;
  }

  bool is_equilibrium(const std::vector<int>& z) const {
    for (int i = 0; i < players; ++i) {
      Int current = cost(z, i, z[i]);
      for (int x = 0; x < points; ++x) {
        if (x != z[i] && cost(z, i, x) < current) return false;
      }
    }
    return true;
  }

  Int potential(const std::vector<int>& z) const {
    Int phi = 0;
    for (int i = 0; i < players; ++i) phi += pen_cost[i][z[i]];
    for (std::size_t k = 0; k < edges.size(); ++k) {
      phi += edge_weight[k] * dist[z[edges[k].i]][z[edges[k].j]];
    }
    return phi;
  }

  Int scale_squared = 1;
};

std::vector<std::vector<int>> full_candidates(const Game& game) {
  std::vector<int> all(game.points());
  for (int x = 0; x < game.points(); ++x) all[x] = x;
  return std::vector<std::vector<int>>(game.graph.players(), all);
}

void check_budget(const std::vector<std::vector<int>>& candidates,
                  const EnumerationBudget& budget) {
  Int count = 1;
  for (const auto& c : candidates) {
    count *= static_cast<int>(c.size());
    if (count > budget.max_profiles) {
      throw BudgetExceeded("profile space exceeds the enumeration budget of " +
                           std::to_string(budget.max_profiles) + " profiles");
    }
  }
}

/// Calls visit(z) for every profile in lexicographic player-major order.
template <typename Fn>
void for_each_profile(const std::vector<std::vector<int>>& candidates, Fn&& visit) {
  const int n = static_cast<int>(candidates.size());
  std::vector<int> pos(n, 0);
  std::vector<int> z(n);
  for (int i = 0; i < n; ++i) z[i] = candidates[i][0];
  while (true) {
    visit(z);
    int i = n - 1;
    while (i >= 0 && pos[i] + 1 == static_cast<int>(candidates[i].size())) {
      pos[i] = 0;
      z[i] = candidates[i][0];
      --i;
    }
    if (i < 0) return;
    ++pos[i];
    z[i] = candidates[i][pos[i]];
  }
}

}  // namespace

std::vector<StrategyProfile> enumerate_equilibria(const Game& game,
                                                  const EnumerationBudget& budget) {
  return enumerate_equilibria(game, full_candidates(game), budget);
}

std::vector<StrategyProfile> enumerate_equilibria(const Game& game,
                                                  const std::vector<std::vector<int>>& candidates,
                                                  const EnumerationBudget& budget) {
  if (static_cast<int>(candidates.size()) != game.graph.players()) {
    throw std::invalid_argument("one candidate set per player required");
  }
  std::vector<std::vector<int>> sets = candidates;
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) throw std::invalid_argument("candidate sets must be nonempty");
    if (set.front() < 0 || set.back() >= game.points()) {
      throw std::out_of_range("candidate point out of range");
    }
  }
  if (game.graph.players() == 0) return {StrategyProfile{}};
  check_budget(sets, budget);

  ScaledGame scaled(game);
  std::vector<StrategyProfile> out;
  for_each_profile(sets, [&](const std::vector<int>& z) {
    if (scaled.is_equilibrium(z)) out.push_back(StrategyProfile{z});
  });
  return out;
}

std::pair<StrategyProfile, Rational> global_potential_min(const Game& game,
                                                          const EnumerationBudget& budget) {
  if (game.graph.directed()) {
    throw std::domain_error("potential undefined for directed games");
  }
  if (game.graph.players() == 0) return {StrategyProfile{}, Rational(0)};
  auto candidates = full_candidates(game);
  check_budget(candidates, budget);

  ScaledGame scaled(game);
  bool found = false;
  Int best_phi = 0;
  std::vector<int> best_z;
  for_each_profile(candidates, [&](const std::vector<int>& z) {
    Int phi = scaled.potential(z);
    if (!found || phi < best_phi) {
      found = true;
      best_phi = phi;
      best_z = z;
    }
  });
  return {StrategyProfile{best_z}, Rational(best_phi) / Rational(scaled.scale_squared)};
}

int nearest_median_bruteforce(const TreeMetric& tree, const std::vector<Rational>& weights,
                              int v) {
  const int n = tree.points();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("one weight per vertex required");
  }
  Rational total = 0;
  for (const auto& w : weights) total += w;
  if (total <= 0) throw std::invalid_argument("total weight must be positive");

  std::vector<Rational> cost(n, Rational(0));
  for (int u = 0; u < n; ++u) {
    for (int x = 0; x < n; ++x) {
      if (weights[x] != 0) cost[u] += weights[x] * tree.distance(u, x);
    }
  }
  Rational best_cost = cost[0];
  for (int u = 1; u < n; ++u) best_cost = std::min(best_cost, cost[u]);

  int best = -1;
  Rational best_dist;
  for (int u = 0; u < n; ++u) {
    if (cost[u] != best_cost) continue;
    Rational d = tree.distance(v, u);
    if (best < 0 || d < best_dist) {
      best = u;
      best_dist = d;
    }
  }
  return best;
}

}  // namespace dpg
