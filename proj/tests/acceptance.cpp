// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every check is exact rational arithmetic, zero tolerance.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "dpg/dynamics.hpp"
#include "dpg/oracle.hpp"
#include "dpg/reductions.hpp"
#include "dpg/solvers.hpp"
#include "support/generators.hpp"

using namespace dpg;
using testing::Rng;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& detail, std::string& why) {
  if (!ok && why.empty()) why = detail;
  return ok;
}

// 1. Exact potential: delta(potential) == delta(cost) for every unilateral
// deviation of every random undirected game.
bool exact_potential(std::string& why) {
  Rng rng(101);
  for (int round = 0; round < 500; ++round) {
    int p = testing::rand_int(rng, 1, 6);
    int n = testing::rand_int(rng, 1, 6);
    Game g = testing::rand_game(rng, n, testing::rand_matrix_metric(rng, p), false);
    StrategyProfile z = testing::rand_profile(rng, g);
    Rational phi = potential(g, z);
    for (int i = 0; i < n; ++i) {
      Rational cost_here = player_cost(g, z, i);
      for (int x = 0; x < p; ++x) {
        StrategyProfile w = z;
        w.strategy[i] = x;
        if (!expect(potential(g, w) - phi == deviation_cost(g, z, i, x) - cost_here,
                    "potential delta mismatch, round " + std::to_string(round), why)) {
          return false;
        }
      }
    }
  }
  return true;
}

// 2. Tree-metric solver: equilibrium output, oracle membership, iteration
// bound p * n. Sizes reach 10 points and 5 players; the joint profile count
// is capped so exhaustive oracle enumeration stays fast.
bool tree_solver(std::string& why) {
  Rng rng(202);
  for (int round = 0; round < 200; ++round) {
    int p = testing::rand_int(rng, 1, 10);
    int n_cap = 5;
    while (n_cap > 1) {
      double profiles = 1;
      for (int k = 0; k < n_cap; ++k) profiles *= p;
      if (profiles <= 20000) break;
      --n_cap;
    }
    int n = testing::rand_int(rng, 1, n_cap);
    bool directed = testing::rand_int(rng, 0, 1) == 1;
    Game g = testing::rand_game(rng, n, testing::rand_tree(rng, p), directed);
    auto report = tree_metric_algo(g);
    bool ok = is_equilibrium(g, report.profile) &&
              report.loop_iterations <= static_cast<std::size_t>(p) * n;
    if (ok) {
      auto equilibria = enumerate_equilibria(g);
      ok = std::find(equilibria.begin(), equilibria.end(), report.profile) != equilibria.end();
    }
    if (!expect(ok, "tree solve failed, round " + std::to_string(round), why)) return false;
  }
  return true;
}

// 3. Product-metric solver: equilibrium output and per-factor medians.
bool product_solver(std::string& why) {
  Rng rng(303);
  for (int round = 0; round < 100; ++round) {
    int f = testing::rand_int(rng, 1, 3);
    std::vector<std::vector<Rational>> factors(f);
    for (auto& coords : factors) {
      Rational c = 0;
      for (int k = testing::rand_int(rng, 1, 4); k > 0; --k) {
        coords.push_back(c);
        c += testing::rand_positive_rational(rng);
      }
    }
    int n = testing::rand_int(rng, 1, 4);
    bool directed = testing::rand_int(rng, 0, 1) == 1;
    Game g = testing::rand_game(rng, n, ProductMetric(factors), directed);
    const auto& product = std::get<ProductMetric>(g.metric);
    auto report = product_metric_algo(g);
    if (!expect(is_equilibrium(g, report.profile),
                "product solve not an equilibrium, round " + std::to_string(round), why)) {
      return false;
    }
    for (int i = 0; i < n; ++i) {
      auto coords = product.coords_of(report.profile.strategy[i]);
      for (int t = 0; t < f; ++t) {
        std::vector<Rational> induced = project_penalties(product, g.penalties[i], t);
        for (const auto& [j, w] : g.graph.neighbours(i)) {
          induced[product.coords_of(report.profile.strategy[j])[t]] += w;
        }
        Rational total = 0;
        for (const auto& x : induced) total += x;
        if (total == 0) continue;
        auto medians = tree_medians(path_as_tree(product.factor(t)), induced);
        if (!expect(std::find(medians.begin(), medians.end(), coords[t]) != medians.end(),
                    "coordinate is not a factor median, round " + std::to_string(round), why)) {
          return false;
        }
      }
    }
  }
  return true;
}

// 4. Reductions: exhaustive max-cut instances on <= 4 vertices with edge
// weights in {absent, 1, 2, 3}; for both variants the lifted cuts that are
// equilibria are exactly the local max cuts, and the restricted-game cost
// identities hold on every lifted profile.
bool reduction_correspondence(std::string& why) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) slots.push_back({u, v});
  }

  long long checked = 0;
  for (long long code = 0; code < 4096; ++code) {
    MaxCutInstance inst{4, {}};
    long long rest = code;
    for (const auto& [u, v] : slots) {
      int w = static_cast<int>(rest % 4);
      rest /= 4;
      if (w > 0) inst.edges.push_back({u, v, Rational(w)});
    }
    inst.validate();

    std::vector<Cut> cuts;
    for (int mask = 0; mask < 16; ++mask) {
      Cut cut{std::vector<int>(4)};
      for (int v = 0; v < 4; ++v) cut.side[v] = (mask >> v) & 1;
      cuts.push_back(std::move(cut));
    }
    std::vector<Cut> local_max;
    for (const auto& cut : cuts) {
      if (is_local_maxcut(inst, cut)) local_max.push_back(cut);
    }

    std::vector<ReductionArtifact> artifacts;
    artifacts.push_back(reduce_unweighted(inst, Rational(2, 3)));
    artifacts.push_back(reduce_unweighted(inst, Rational(3, 4)));
    artifacts.push_back(reduce_weighted(inst));
    for (const auto& art : artifacts) {
      // All lifted profiles, checked in one enumeration pass: cut players on
      // their two mapped points, auxiliaries clamped to their preferences.
      std::vector<std::vector<int>> candidates(art.game.graph.players());
      for (int v = 0; v < 4; ++v) {
        candidates[art.cut_player_map[v]] = {art.strategy_point[v][0], art.strategy_point[v][1]};
        std::sort(candidates[art.cut_player_map[v]].begin(),
                  candidates[art.cut_player_map[v]].end());
      }
      for (std::size_t k = 0; k < art.aux_players.size(); ++k) {
        candidates[art.aux_players[k]] = {art.aux_preferred[k]};
      }
      std::vector<StrategyProfile> expected;
      for (const auto& cut : local_max) expected.push_back(lift_cut(art, cut));
      std::sort(expected.begin(), expected.end());
      if (!expect(enumerate_equilibria(art.game, candidates) == expected,
                  "equilibrium/local-max-cut mismatch, instance " + std::to_string(code), why)) {
        return false;
      }

      for (const auto& cut : cuts) {
        StrategyProfile z = lift_cut_restricted(art, cut);
        for (int v = 0; v < 4; ++v) {
          Rational expected_cost;
          if (art.variant == ReductionVariant::Unweighted) {
            expected_cost = Rational(inst.degree(v)) * art.W;
          } else {
            for (const auto& e : inst.edges) {
              if (e.u == v || e.v == v) expected_cost += 2 * e.weight;
            }
          }
          expected_cost -= local_maxcut_utility(inst, cut, v);
          if (!expect(player_cost(art.restricted_game, z, v) == expected_cost,
                      "cost identity broken, instance " + std::to_string(code), why)) {
            return false;
          }
        }
      }
      ++checked;
    }
  }
  return expect(checked == 3 * 4096, "instance count mismatch", why);
}

// 5. Directed counterexample: auxiliary dominance, no equilibrium over the
// cycle players' 6^3 joint strategies, and a round-robin BRD cycle.
bool counterexample(std::string& why) {
  Game g = build_directed_counterexample();
  std::vector<std::vector<int>> candidates(33);
  for (int i = 0; i < 3; ++i) candidates[i] = {0, 1, 2, 3, 4, 5};
  for (int aux = 3; aux < 33; ++aux) {
    int preferred = -1;
    for (int x = 0; x < 6; ++x) {
      if (g.penalties[aux][x] > 0) preferred = x;
    }
    if (!expect(preferred >= 0, "auxiliary without preference", why)) return false;
    candidates[aux] = {preferred};
    // Dominance: the auxiliary's cost ignores everyone else, so checking one
    // profile suffices; every deviation off the preferred point strictly
    // increases it.
    StrategyProfile z{std::vector<int>(33, 0)};
    z.strategy[aux] = preferred;
    Rational at_pref = player_cost(g, z, aux);
    if (!expect(g.graph.neighbours(aux).empty(), "auxiliary has out-neighbours", why)) {
      return false;
    }
    for (int x = 0; x < 6; ++x) {
      if (x == preferred) continue;
      if (!expect(deviation_cost(g, z, aux, x) > at_pref, "auxiliary deviation not worse", why)) {
        return false;
      }
    }
  }
  if (!expect(enumerate_equilibria(g, candidates).empty(), "an equilibrium exists", why)) {
    return false;
  }
  auto result = run_brd(g, StrategyProfile{std::vector<int>(33, 0)},
                        Scheduler{SchedulerPolicy::RoundRobin, 0});
  return expect(result.trace.outcome == Outcome::Cycle, "round-robin BRD did not cycle", why);
}

// 6. Consensus shortcut for connected alpha-form games with alpha <= 1/2.
bool consensus(std::string& why) {
  Rng rng(606);
  for (int round = 0; round < 200; ++round) {
    int n = testing::rand_int(rng, 1, 6);
    NeighbourhoodGraph graph = testing::rand_connected_unit_graph(rng, n);
    int p = testing::rand_int(rng, 1, 6);
    MatrixMetric metric = testing::rand_matrix_metric(rng, p);
    std::vector<int> preferred(n);
    for (auto& s : preferred) s = testing::rand_int(rng, 0, p - 1);
    int den = testing::rand_int(rng, 2, 9);
    Rational alpha(testing::rand_int(rng, 0, den / 2), den);
    Game g = from_alpha_form(graph, metric, preferred, alpha);
    if (!expect(is_equilibrium(g, consensus_equilibrium(g)),
                "consensus output not an equilibrium, round " + std::to_string(round), why)) {
      return false;
    }
  }
  return true;
}

// 7. Tree medians: component rule equals brute-force argmin, and cost
// strictly decreases along the path from any vertex to its nearest median.
bool medians(std::string& why) {
  Rng rng(707);
  for (int round = 0; round < 500; ++round) {
    int p = testing::rand_int(rng, 1, 12);
    TreeMetric tree = testing::rand_tree(rng, p);
    std::vector<Rational> weights(p);
    for (auto& w : weights) w = testing::rand_penalty(rng);
    weights[testing::rand_int(rng, 0, p - 1)] += testing::rand_positive_rational(rng);

    auto cost = [&](int u) {
      Rational total = 0;
      for (int v = 0; v < p; ++v) total += weights[v] * tree.distance(v, u);
      return total;
    };
    Rational best = cost(0);
    for (int u = 1; u < p; ++u) best = std::min(best, cost(u));
    std::vector<int> brute;
    for (int u = 0; u < p; ++u) {
      if (cost(u) == best) brute.push_back(u);
    }
    if (!expect(tree_medians(tree, weights) == brute,
                "median sets differ, round " + std::to_string(round), why)) {
      return false;
    }

    for (int v = 0; v < p; ++v) {
      auto walk = tree.path(v, nearest_median_bruteforce(tree, weights, v));
      for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        if (!expect(cost(walk[k + 1]) < cost(walk[k]),
                    "cost not strictly decreasing toward median, round " + std::to_string(round),
                    why)) {
          return false;
        }
      }
    }
  }
  return true;
}

// 8. Every constructed metric satisfies the metric axioms.
bool metric_validity(std::string& why) {
  Rng rng(808);
  for (int round = 0; round < 100; ++round) {
    Metric tree = testing::rand_tree(rng, testing::rand_int(rng, 1, 10));
    Metric matrix = testing::rand_matrix_metric(rng, testing::rand_int(rng, 1, 8));
    std::vector<std::vector<Rational>> factors(testing::rand_int(rng, 1, 3));
    for (auto& coords : factors) {
      Rational c = 0;
      for (int k = testing::rand_int(rng, 1, 4); k > 0; --k) {
        coords.push_back(c);
        c += testing::rand_positive_rational(rng);
      }
    }
    Metric product = ProductMetric(std::move(factors));
    for (const Metric* m : {&tree, &matrix, &product}) {
      if (!expect(verify_metric_axioms(to_matrix(*m)).empty(),
                  "generator metric violates the axioms, round " + std::to_string(round), why)) {
        return false;
      }
    }
  }

  std::vector<MaxCutInstance> instances = {
      {1, {}},
      {2, {{0, 1, Rational(1)}}},
      {3, {{0, 1, Rational(1)}, {1, 2, Rational(2)}, {0, 2, Rational(3)}}},
      {4, {{0, 1, Rational(2)}, {1, 2, Rational(1)}, {2, 3, Rational(3)}, {0, 3, Rational(1)}}},
  };
  for (const auto& inst : instances) {
    for (const auto& alpha : {Rational(2, 3), Rational(3, 4)}) {
      if (!expect(verify_metric_axioms(to_matrix(reduce_unweighted(inst, alpha).game.metric)).empty(),
                  "unweighted reduction metric invalid", why)) {
        return false;
      }
    }
    if (!expect(verify_metric_axioms(to_matrix(reduce_weighted(inst).game.metric)).empty(),
                "weighted reduction metric invalid", why)) {
      return false;
    }
  }
  return expect(verify_metric_axioms(to_matrix(build_directed_counterexample().metric)).empty(),
                "counterexample metric invalid", why);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"exact potential on random undirected games", exact_potential},
      {"tree-metric solver: equilibrium, oracle membership, iteration bound", tree_solver},
      {"product-metric solver: equilibrium and factor medians", product_solver},
      {"max-cut reductions: correspondence and cost identities", reduction_correspondence},
      {"directed counterexample: no equilibrium, BRD cycles", counterexample},
      {"consensus shortcut yields equilibria", consensus},
      {"tree medians and strict descent", medians},
      {"all constructed metrics satisfy the axioms", metric_validity},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string why;
    bool ok = false;
    try {
      ok = criteria[k].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].name;
    if (!ok && !why.empty()) std::cout << " (" << why << ")";
    std::cout << std::endl;
    failures += ok ? 0 : 1;
  }
  return failures;
}
