#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dpg/oracle.hpp"
#include "dpg/solvers.hpp"
#include "support/generators.hpp"

using namespace dpg;
using testing::Rng;

namespace {

ProductMetric grid2x2() {
  return ProductMetric({{Rational(0), Rational(1)}, {Rational(0), Rational(1)}});
}

Game rand_tree_game(Rng& rng, int max_points, int max_players) {
  int p = testing::rand_int(rng, 1, max_points);
  int n = testing::rand_int(rng, 1, max_players);
  bool directed = testing::rand_int(rng, 0, 1) == 1;
  return testing::rand_game(rng, n, testing::rand_tree(rng, p), directed);
}

Game rand_product_game(Rng& rng, int max_factors, int max_factor_points, int max_players) {
  int f = testing::rand_int(rng, 1, max_factors);
  std::vector<std::vector<Rational>> factors(f);
  for (auto& coords : factors) {
    Rational c = 0;
    for (int k = testing::rand_int(rng, 1, max_factor_points); k > 0; --k) {
      coords.push_back(c);
      c += testing::rand_positive_rational(rng);
    }
  }
  int n = testing::rand_int(rng, 1, max_players);
  bool directed = testing::rand_int(rng, 0, 1) == 1;
  return testing::rand_game(rng, n, ProductMetric(std::move(factors)), directed);
}

}  // namespace

TEST_CASE("consensus_equilibrium") {
  Metric path = graph_to_matrix(GraphMetricSpec{3, {{0, 1, 1}, {1, 2, 1}}});
  SUBCASE("an isolated player keeps her preferred strategy") {
    NeighbourhoodGraph graph(1, false, {});
    Game g = from_alpha_form(graph, path, {2}, Rational(1, 4));
    CHECK(consensus_equilibrium(g) == StrategyProfile{{2}});
  }
  SUBCASE("a connected triangle agrees on one point") {
    NeighbourhoodGraph graph(3, false, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    Game g = from_alpha_form(graph, path, {0, 1, 2}, Rational(1, 2));
    StrategyProfile z = consensus_equilibrium(g);
    CHECK(z.strategy[0] == z.strategy[1]);
    CHECK(z.strategy[1] == z.strategy[2]);
    CHECK(is_equilibrium(g, z));
  }
  SUBCASE("components may settle on different points") {
    Rng rng(808);
    for (int round = 0; round < 40; ++round) {
      int n = 6;
      // Two halves, each internally connected, never joined.
      std::vector<NeighbourhoodGraph::Edge> edges;
      for (int v = 1; v < 3; ++v) edges.push_back({testing::rand_int(rng, 0, v - 1), v, 1});
      for (int v = 4; v < 6; ++v) edges.push_back({testing::rand_int(rng, 3, v - 1), v, 1});
      NeighbourhoodGraph graph(n, false, std::move(edges));
      int p = testing::rand_int(rng, 2, 5);
      MatrixMetric metric = testing::rand_matrix_metric(rng, p);
      std::vector<int> preferred(n);
      for (auto& s : preferred) s = testing::rand_int(rng, 0, p - 1);
      Rational alpha(testing::rand_int(rng, 0, 3), 6);
      Game g = from_alpha_form(graph, metric, preferred, alpha);
      StrategyProfile z = consensus_equilibrium(g);
      CHECK(z.strategy[0] == z.strategy[1]);
      CHECK(z.strategy[3] == z.strategy[4]);
      CHECK(is_equilibrium(g, z));
    }
  }
  SUBCASE("alpha above 1/2 is rejected") {
    NeighbourhoodGraph graph(2, false, {{0, 1, 1}});
    Game g = from_alpha_form(graph, path, {0, 2}, Rational(2, 3));
    CHECK_THROWS_AS(static_cast<void>(consensus_equilibrium(g)), std::invalid_argument);
  }
}

TEST_CASE("tree_metric_algo") {
  SUBCASE("a single point mass walks down to its leaf") {
    // Path 0-1-2-3 rooted at 0; penalty sits at the far leaf.
    TreeMetric path(0, {0, 0, 1, 2},
                    {Rational(0), Rational(1), Rational(1), Rational(1)});
    NeighbourhoodGraph graph(1, false, {});
    Game g = make_game(graph, path, {{0, 0, 0, 1}});
    auto report = tree_metric_algo(g);
    CHECK(report.profile == StrategyProfile{{3}});
    CHECK(report.loop_iterations == 3);
  }
  SUBCASE("random games: equilibrium, iteration bound, oracle membership") {
    Rng rng(2718);
    for (int round = 0; round < 60; ++round) {
      Game g = rand_tree_game(rng, 8, 4);
      auto report = tree_metric_algo(g);
      CHECK(is_equilibrium(g, report.profile));
      CHECK(report.loop_iterations <=
            static_cast<std::size_t>(g.points()) * static_cast<std::size_t>(g.graph.players()));
      auto equilibria = enumerate_equilibria(g);
      CHECK(std::find(equilibria.begin(), equilibria.end(), report.profile) != equilibria.end());
    }
  }
  SUBCASE("solver output is deterministic") {
    Rng rng(5);
    Game g = rand_tree_game(rng, 8, 4);
    auto a = tree_metric_algo(g);
    auto b = tree_metric_algo(g);
    CHECK(a.profile == b.profile);
    CHECK(a.loop_iterations == b.loop_iterations);
  }
  SUBCASE("equilibria are local, not global, potential minima") {
    Rng rng(66);
    for (int round = 0; round < 20; ++round) {
      int p = testing::rand_int(rng, 2, 6);
      Game g = testing::rand_game(rng, testing::rand_int(rng, 1, 3),
                                  testing::rand_tree(rng, p), false);
      auto report = tree_metric_algo(g);
      auto [min_profile, min_phi] = global_potential_min(g);
      CHECK(potential(g, report.profile) >= min_phi);
    }
  }
  SUBCASE("requires a tree metric") {
    NeighbourhoodGraph graph(1, false, {});
    Game g = make_game(graph, grid2x2(), {{1, 0, 0, 0}});
    CHECK_THROWS_AS(static_cast<void>(tree_metric_algo(g)), std::invalid_argument);
  }
}

TEST_CASE("product_metric_algo") {
  SUBCASE("a single path factor matches the tree solver") {
    Rng rng(13);
    for (int round = 0; round < 20; ++round) {
      std::vector<Rational> coords;
      Rational c = 0;
      for (int k = testing::rand_int(rng, 1, 6); k > 0; --k) {
        coords.push_back(c);
        c += testing::rand_positive_rational(rng);
      }
      int n = testing::rand_int(rng, 1, 4);
      NeighbourhoodGraph graph = testing::rand_graph(rng, n, false);
      auto pens = testing::rand_penalties(rng, n, static_cast<int>(coords.size()));
      Game product_game = make_game(graph, ProductMetric({coords}), pens);
      Game tree_game = make_game(graph, path_as_tree(coords), pens);
      CHECK(product_metric_algo(product_game).profile == tree_metric_algo(tree_game).profile);
    }
  }
  SUBCASE("2x2 grid with opposite-corner point masses") {
    NeighbourhoodGraph graph(2, false, {{0, 1, 1}});
    ProductMetric grid = grid2x2();
    std::vector<std::vector<Rational>> pens(2, std::vector<Rational>(4, Rational(0)));
    pens[0][grid.index_of({0, 0})] = 1;
    pens[1][grid.index_of({1, 1})] = 1;
    Game g = make_game(graph, grid, pens);
    auto report = product_metric_algo(g);
    CHECK(is_equilibrium(g, report.profile));
    // Brute force over all 16 joint profiles agrees that it is an equilibrium.
    auto equilibria = enumerate_equilibria(g);
    CHECK(std::find(equilibria.begin(), equilibria.end(), report.profile) != equilibria.end());
  }
  SUBCASE("random games: equilibrium, per-factor medians, oracle membership") {
    Rng rng(31415);
    for (int round = 0; round < 50; ++round) {
      Game g = rand_product_game(rng, 3, 3, 3);
      const auto& product = std::get<ProductMetric>(g.metric);
      auto report = product_metric_algo(g);
      CHECK(is_equilibrium(g, report.profile));
      CHECK(report.factor_iterations.size() ==
            static_cast<std::size_t>(product.factor_count()));

      // Claim: best response iff partial best response in every factor.
      for (int i = 0; i < g.graph.players(); ++i) {
        auto coords = product.coords_of(report.profile.strategy[i]);
        for (int t = 0; t < product.factor_count(); ++t) {
          std::vector<Rational> induced = project_penalties(product, g.penalties[i], t);
          for (const auto& [j, w] : g.graph.neighbours(i)) {
            induced[product.coords_of(report.profile.strategy[j])[t]] += w;
          }
          Rational total = 0;
          for (const auto& x : induced) total += x;
          if (total == 0) continue;
          auto medians = tree_medians(path_as_tree(product.factor(t)), induced);
          CHECK(std::find(medians.begin(), medians.end(), coords[t]) != medians.end());
        }
      }

      auto equilibria = enumerate_equilibria(g);
      CHECK(std::find(equilibria.begin(), equilibria.end(), report.profile) != equilibria.end());
    }
  }
}
