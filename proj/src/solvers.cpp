#include "dpg/solvers.hpp"

#include <stdexcept>

namespace dpg {

StrategyProfile consensus_equilibrium(const Game& game) {
  if (!game.alpha || !game.preferred) {
    throw std::invalid_argument("consensus shortcut requires an alpha-form game");
  }
  if (*game.alpha > Rational(1, 2)) {
    throw std::invalid_argument("consensus shortcut requires alpha <= 1/2");
  }
  if (game.graph.directed()) {
    throw std::invalid_argument("consensus shortcut requires an undirected graph");
  }

  const int n = game.graph.players();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    component[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members[id].push_back(u);
      for (const auto& [v, w] : game.graph.neighbours(u)) {
        (void)w;
        if (component[v] < 0) {
          component[v] = id;
          stack.push_back(v);
        }
      }
    }
  }

  StrategyProfile z;
  z.strategy.assign(n, 0);
  for (const auto& comp : members) {
    if (comp.size() == 1 && game.graph.degree(comp.front()) == 0) {
      z.strategy[comp.front()] = (*game.preferred)[comp.front()];
      continue;
    }
    int best = 0;
    Rational best_sum;
    for (int a = 0; a < game.points(); ++a) {
      Rational sum = 0;
      for (int i : comp) sum += distance(game.metric, (*game.preferred)[i], a);
      if (a == 0 || sum < best_sum) {
        best = a;
        best_sum = sum;
      }
    }
    for (int i : comp) z.strategy[i] = best;
  }
  return z;
}

SolveReport tree_metric_algo(const Game& game) {
  const auto* tree = std::get_if<TreeMetric>(&game.metric);
  if (!tree) throw std::invalid_argument("tree solver requires a tree metric");

  const int n = game.graph.players();
  SolveReport report;
  report.profile.strategy.assign(n, tree->root());
  auto& z = report.profile;

  // Players only ever descend, so at most points * players moves happen.
  const std::size_t bound =
      static_cast<std::size_t>(tree->points()) * static_cast<std::size_t>(n);
  while (true) {
    bool moved = false;
    for (int i = 0; i < n && !moved; ++i) {
      const Rational current = deviation_cost(game, z, i, z.strategy[i]);
      for (int child : tree->children(z.strategy[i])) {
        if (deviation_cost(game, z, i, child) < current) {
          z.strategy[i] = child;
          ++report.loop_iterations;
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
    if (report.loop_iterations > bound) {
      throw std::logic_error("tree solver exceeded its iteration bound");
    }
  }
  return report;
}

SolveReport product_metric_algo(const Game& game) {
  const auto* product = std::get_if<ProductMetric>(&game.metric);
  if (!product) throw std::invalid_argument("product solver requires a product metric");

  const int n = game.graph.players();
  std::vector<std::vector<int>> coords(n, std::vector<int>(product->factor_count()));
  SolveReport report;

  for (int t = 0; t < product->factor_count(); ++t) {
    std::vector<std::vector<Rational>> factor_penalties(n);
    for (int i = 0; i < n; ++i) {
      factor_penalties[i] = project_penalties(*product, game.penalties[i], t);
    }
    Game subgame = make_game(game.graph, path_as_tree(product->factor(t)),
                             std::move(factor_penalties));
    SolveReport sub = tree_metric_algo(subgame);
    for (int i = 0; i < n; ++i) coords[i][t] = sub.profile.strategy[i];
    report.factor_iterations.push_back(sub.loop_iterations);
    report.loop_iterations += sub.loop_iterations;
  }

  report.profile.strategy.resize(n);
  for (int i = 0; i < n; ++i) {
    report.profile.strategy[i] = product->index_of(coords[i]);
  }
  return report;
}

}  // namespace dpg
