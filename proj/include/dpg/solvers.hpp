#pragma once

#include <vector>

#include "dpg/game.hpp"

namespace dpg {

struct SolveReport {
  StrategyProfile profile;
  std::size_t loop_iterations = 0;
  std::vector<std::size_t> factor_iterations;  // product solve only
};

/// The connected-components shortcut for alpha-form games with alpha <= 1/2:
/// isolated players play their preferred point; each component plays the
/// single point minimizing the component's total preference distance (ties
/// broken toward the smallest point index). Throws for alpha > 1/2 or
/// non-alpha-form games.
StrategyProfile consensus_equilibrium(const Game& game);

/// Starts every player at the root and repeatedly applies the
/// lexicographically first strictly improving move to a child of the current
/// strategy. Terminates at an equilibrium within points * players loop
/// iterations, for any directed/weighted/penalized game on a tree metric.
SolveReport tree_metric_algo(const Game& game);

/// Solves each path factor independently as a rooted tree (root = smallest
/// coordinate) with penalties projected onto the factor, then assembles the
/// per-factor results into a product-metric equilibrium.
SolveReport product_metric_algo(const Game& game);

}  // namespace dpg
