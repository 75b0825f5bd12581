#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dpg/game.hpp"

namespace dpg {

struct EnumerationBudget {
  std::uint64_t max_profiles = 2'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All equilibria of the game in lexicographic (player-major) profile order.
/// Aborts with BudgetExceeded if the profile space exceeds the budget;
/// never silently truncates.
std::vector<StrategyProfile> enumerate_equilibria(const Game& game,
                                                  const EnumerationBudget& budget = {});

/// Same, with each player's strategy restricted to the given candidate set
/// (deviations still range over all points). Used e.g. to clamp auxiliary
/// players to their dominant strategy.
std::vector<StrategyProfile> enumerate_equilibria(const Game& game,
                                                  const std::vector<std::vector<int>>& candidates,
                                                  const EnumerationBudget& budget = {});

/// Lexicographically-first profile attaining the minimum potential, with its
/// value. Undirected games only.
std::pair<StrategyProfile, Rational> global_potential_min(const Game& game,
                                                          const EnumerationBudget& budget = {});

/// The median (by brute-force cost argmin) nearest to v, ties broken toward
/// the smallest vertex index.
int nearest_median_bruteforce(const TreeMetric& tree, const std::vector<Rational>& weights,
                              int v);

}  // namespace dpg
