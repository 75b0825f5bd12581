#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dpg/oracle.hpp"
#include "dpg/reductions.hpp"
#include "support/generators.hpp"

using namespace dpg;
using testing::Rng;

namespace {

// Reference implementation straight off the definitions, all-rational, no
// scaling tricks; deliberately shares no code with the fast path.
std::vector<StrategyProfile> slow_enumerate(const Game& game) {
  std::vector<StrategyProfile> out;
  int n = game.graph.players();
  int p = game.points();
  StrategyProfile z{std::vector<int>(n, 0)};
  for (;;) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      Rational here = player_cost(game, z, i);
      for (int x = 0; x < p && stable; ++x) {
        if (deviation_cost(game, z, i, x) < here) stable = false;
      }
    }
    if (stable) out.push_back(z);
    int i = n - 1;
    while (i >= 0 && z.strategy[i] == p - 1) z.strategy[i--] = 0;
    if (i < 0) break;
    ++z.strategy[i];
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_equilibria") {
  SUBCASE("matches the definitional reference on random games") {
    Rng rng(1234);
    for (int round = 0; round < 120; ++round) {
      int p = testing::rand_int(rng, 1, 4);
      int n = testing::rand_int(rng, 1, 4);
      bool directed = testing::rand_int(rng, 0, 1) == 1;
      Game g = testing::rand_game(rng, n, testing::rand_matrix_metric(rng, p), directed);
      CHECK(enumerate_equilibria(g) == slow_enumerate(g));
    }
  }
  SUBCASE("output is lexicographically sorted") {
    Rng rng(55);
    for (int round = 0; round < 20; ++round) {
      Game g = testing::rand_game(rng, 3, testing::rand_matrix_metric(rng, 3), false);
      auto eq = enumerate_equilibria(g);
      CHECK(std::is_sorted(eq.begin(), eq.end()));
    }
  }
  SUBCASE("candidate restriction clamps players without hiding deviations") {
    // Two players on a path metric, each with a point mass; clamping player 1
    // to her mass point must reproduce exactly the unrestricted equilibria
    // that have her there.
    Metric path = graph_to_matrix(GraphMetricSpec{3, {{0, 1, 1}, {1, 2, 1}}});
    NeighbourhoodGraph graph(2, false, {{0, 1, 1}});
    Game g = make_game(graph, path, {{3, 0, 0}, {0, 0, 3}});
    auto all = enumerate_equilibria(g);
    auto clamped = enumerate_equilibria(g, {{0, 1, 2}, {2}});
    std::vector<StrategyProfile> expected;
    for (const auto& z : all) {
      if (z.strategy[1] == 2) expected.push_back(z);
    }
    CHECK(clamped == expected);
    // A clamp onto a non-equilibrium point rules everything out.
    CHECK(enumerate_equilibria(g, {{0, 1, 2}, {0}}).empty());
  }
  SUBCASE("budget is enforced, not silently truncated") {
    Rng rng(9);
    Game g = testing::rand_game(rng, 4, testing::rand_matrix_metric(rng, 4), false);
    CHECK_THROWS_AS(static_cast<void>(enumerate_equilibria(g, EnumerationBudget{255})),
                    BudgetExceeded);
    CHECK_NOTHROW(static_cast<void>(enumerate_equilibria(g, EnumerationBudget{256})));
  }
  SUBCASE("zero players yields the empty profile") {
    Game g = make_game(NeighbourhoodGraph(0, false, {}),
                       MatrixMetric({{Rational(0)}}), {});
    CHECK(enumerate_equilibria(g) == std::vector<StrategyProfile>{StrategyProfile{{}}});
  }
}

TEST_CASE("global_potential_min") {
  SUBCASE("matches a direct scan on random games") {
    Rng rng(77);
    for (int round = 0; round < 60; ++round) {
      int p = testing::rand_int(rng, 1, 4);
      int n = testing::rand_int(rng, 1, 4);
      Game g = testing::rand_game(rng, n, testing::rand_matrix_metric(rng, p), false);
      auto [profile, phi] = global_potential_min(g);
      CHECK(potential(g, profile) == phi);
      StrategyProfile z{std::vector<int>(n, 0)};
      bool first = true;
      StrategyProfile best_z;
      Rational best_phi;
      for (;;) {
        Rational value = potential(g, z);
        if (first || value < best_phi) {
          best_z = z;
          best_phi = value;
          first = false;
        }
        int i = n - 1;
        while (i >= 0 && z.strategy[i] == p - 1) z.strategy[i--] = 0;
        if (i < 0) break;
        ++z.strategy[i];
      }
      CHECK(profile == best_z);
      CHECK(phi == best_phi);
    }
  }
  SUBCASE("minimiser is an equilibrium") {
    Rng rng(404);
    for (int round = 0; round < 40; ++round) {
      Game g = testing::rand_game(rng, 3, testing::rand_matrix_metric(rng, 4), false);
      auto [profile, phi] = global_potential_min(g);
      CHECK(is_equilibrium(g, profile));
    }
  }
  SUBCASE("rejects directed games") {
    Game g = build_directed_counterexample();
    CHECK_THROWS_AS(static_cast<void>(global_potential_min(g)), std::domain_error);
  }
}

TEST_CASE("nearest_median_bruteforce") {
  SUBCASE("agrees with the component-rule medians") {
    Rng rng(31);
    for (int round = 0; round < 150; ++round) {
      int p = testing::rand_int(rng, 1, 10);
      TreeMetric tree = testing::rand_tree(rng, p);
      std::vector<Rational> weights(p);
      for (auto& w : weights) w = testing::rand_penalty(rng);
      Rational total = 0;
      for (const auto& w : weights) total += w;
      if (total == 0) continue;
      auto medians = tree_medians(tree, weights);
      for (int v = 0; v < p; ++v) {
        int m = nearest_median_bruteforce(tree, weights, v);
        CHECK(std::find(medians.begin(), medians.end(), m) != medians.end());
        for (int other : medians) {
          Rational dm = tree.distance(v, m);
          Rational dother = tree.distance(v, other);
          CHECK(dm <= dother);
          if (dm == dother) CHECK(m <= other);
        }
      }
    }
  }
}
