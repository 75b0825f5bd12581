#include "dpg/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dpg {

namespace {

constexpr int kMaxCutDegree = 5;

std::vector<std::vector<std::pair<int, Rational>>> adjacency(const MaxCutInstance& inst) {
  std::vector<std::vector<std::pair<int, Rational>>> adj(inst.vertices);
  for (const auto& e : inst.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

void check_cut(const MaxCutInstance& inst, const Cut& cut) {
  if (static_cast<int>(cut.side.size()) != inst.vertices) {
    throw std::invalid_argument("cut must assign a side to every vertex");
  }
  for (int s : cut.side) {
    if (s != 0 && s != 1) throw std::invalid_argument("cut sides must be 0 (A) or 1 (B)");
  }
}

std::vector<std::vector<Rational>> zero_penalties(int players, int points) {
  return std::vector<std::vector<Rational>>(players, std::vector<Rational>(points, Rational(0)));
}

}  // namespace

void MaxCutInstance::validate() const {
  if (vertices < 0) throw std::invalid_argument("max-cut: negative vertex count");
  std::set<std::pair<int, int>> seen;
  std::vector<int> deg(vertices, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= vertices || e.v < 0 || e.v >= vertices) {
      throw std::invalid_argument("max-cut: edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("max-cut: self-loop");
    if (e.weight <= 0) throw std::invalid_argument("max-cut: edge weights must be positive");
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      throw std::invalid_argument("max-cut: duplicate edge");
    }
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int d : deg) {
    if (d > kMaxCutDegree) throw std::invalid_argument("max-cut: vertex degree exceeds five");
  }
}

int MaxCutInstance::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.u == v || e.v == v) ++d;
  }
  return d;
}

Rational MaxCutInstance::total_weight() const {
  Rational total = 0;
  for (const auto& e : edges) total += e.weight;
  return total;
}

Rational local_maxcut_utility(const MaxCutInstance& inst, const Cut& cut, int i) {
  check_cut(inst, cut);
  Rational u = 0;
  for (const auto& e : inst.edges) {
    int other = e.u == i ? e.v : (e.v == i ? e.u : -1);
    if (other >= 0 && cut.side[other] != cut.side[i]) u += e.weight;
  }
  return u;
}

std::optional<CutFlip> find_improving_flip(const MaxCutInstance& inst, const Cut& cut) {
  check_cut(inst, cut);
  for (int i = 0; i < inst.vertices; ++i) {
    Cut flipped = cut;
    flipped.side[i] ^= 1;
    Rational gain = local_maxcut_utility(inst, flipped, i) - local_maxcut_utility(inst, cut, i);
    if (gain > 0) return CutFlip{i, gain};
  }
  return std::nullopt;
}

bool is_local_maxcut(const MaxCutInstance& inst, const Cut& cut) {
  return !find_improving_flip(inst, cut).has_value();
}

std::vector<int> greedy_colouring(const MaxCutInstance& inst) {
  auto adj = adjacency(inst);
  std::vector<int> colour(inst.vertices, -1);
  for (int v = 0; v < inst.vertices; ++v) {
    std::set<int> taken;
    for (const auto& [u, w] : adj[v]) {
      (void)w;
      if (colour[u] >= 0) taken.insert(colour[u]);
    }
    int c = 0;
    while (taken.count(c)) ++c;
    colour[v] = c;
  }
  return colour;
}

ReductionArtifact reduce_unweighted(const MaxCutInstance& inst, const Rational& alpha) {
  inst.validate();
  if (alpha <= Rational(1, 2) || alpha >= 1) {
    throw std::invalid_argument("unweighted reduction requires 1/2 < alpha < 1");
  }

  const int nprime = inst.vertices;
  Rational W = 5 * inst.total_weight();
  if (W == 0) W = 1;  // edgeless instance; any positive W keeps the metric valid

  // Points: A^i = 2i, B^i = 2i+1 for each cut vertex, then C.
  const int c_point = 2 * nprime;
  const int points = 2 * nprime + 1;
  std::vector<std::vector<Rational>> table(points, std::vector<Rational>(points, W));
  for (int x = 0; x < points; ++x) table[x][x] = 0;
  for (const auto& e : inst.edges) {
    Rational d = W - e.weight;
    table[2 * e.u][2 * e.v + 1] = d;
    table[2 * e.v + 1][2 * e.u] = d;
    table[2 * e.v][2 * e.u + 1] = d;
    table[2 * e.u + 1][2 * e.v] = d;
  }

  // ceil(20 alpha / (1 - alpha)) auxiliaries per cut vertex; the odd one out
  // goes to the A side.
  const Int aux_count = ceil_rational(20 * alpha / (1 - alpha));
  const int m = static_cast<int>(aux_count);
  const int m_a = (m + 1) / 2;

  ReductionArtifact artifact;
  artifact.variant = ReductionVariant::Unweighted;
  artifact.instance = inst;
  artifact.W = W;
  artifact.alpha = alpha;

  const int total_players = nprime + nprime * m;
  std::vector<NeighbourhoodGraph::Edge> edges;
  std::vector<int> preferred(total_players, c_point);
  for (const auto& e : inst.edges) edges.push_back({e.u, e.v, 1});
  for (int v = 0; v < nprime; ++v) {
    artifact.cut_player_map.push_back(v);
    artifact.strategy_point.push_back({2 * v, 2 * v + 1});
    for (int k = 0; k < m; ++k) {
      int player = nprime + v * m + k;
      edges.push_back({v, player, 1});
      preferred[player] = k < m_a ? 2 * v : 2 * v + 1;
      artifact.aux_players.push_back(player);
      artifact.aux_preferred.push_back(preferred[player]);
    }
  }

  MatrixMetric metric(std::move(table));
  artifact.game = from_alpha_form(NeighbourhoodGraph(total_players, false, std::move(edges)),
                                  metric, std::move(preferred), alpha);

  std::vector<NeighbourhoodGraph::Edge> core_edges;
  for (const auto& e : inst.edges) core_edges.push_back({e.u, e.v, 1});
  artifact.restricted_game = make_game(NeighbourhoodGraph(nprime, false, std::move(core_edges)),
                                       metric, zero_penalties(nprime, points));
  return artifact;
}

ReductionArtifact reduce_weighted(const MaxCutInstance& inst) {
  inst.validate();
  const int nprime = inst.vertices;

  std::vector<int> colouring = greedy_colouring(inst);
  for (int c : colouring) {
    if (c >= 6) throw std::logic_error("greedy colouring exceeded six colours");
  }

  Rational W = 10 * inst.total_weight();
  if (W == 0) W = 1;

  // 12 points {A,B} x {a..f}: index = parity * 6 + colour.
  const int points = 12;
  std::vector<std::vector<Rational>> table(points, std::vector<Rational>(points));
  for (int x = 0; x < points; ++x) {
    for (int y = 0; y < points; ++y) {
      if (x == y) {
        table[x][y] = 0;
      } else if (x / 6 != y / 6) {
        table[x][y] = 1;
      } else {
        table[x][y] = 2;
      }
    }
  }

  ReductionArtifact artifact;
  artifact.variant = ReductionVariant::Weighted;
  artifact.instance = inst;
  artifact.W = W;
  artifact.colouring = colouring;

  const int total_players = nprime + 2 * nprime;
  std::vector<NeighbourhoodGraph::Edge> edges;
  auto penalties = zero_penalties(total_players, points);
  for (const auto& e : inst.edges) edges.push_back({e.u, e.v, e.weight});
  for (int v = 0; v < nprime; ++v) {
    const int point_a = colouring[v];
    const int point_b = 6 + colouring[v];
    artifact.cut_player_map.push_back(v);
    artifact.strategy_point.push_back({point_a, point_b});
    const int aux_a = nprime + 2 * v;
    const int aux_b = nprime + 2 * v + 1;
    edges.push_back({v, aux_a, W});
    edges.push_back({v, aux_b, W});
    penalties[aux_a][point_a] = 11 * W;
    penalties[aux_b][point_b] = 11 * W;
    artifact.aux_players.push_back(aux_a);
    artifact.aux_preferred.push_back(point_a);
    artifact.aux_players.push_back(aux_b);
    artifact.aux_preferred.push_back(point_b);
  }

  MatrixMetric metric(std::move(table));
  artifact.game = make_game(NeighbourhoodGraph(total_players, false, std::move(edges)), metric,
                            std::move(penalties));

  std::vector<NeighbourhoodGraph::Edge> core_edges;
  for (const auto& e : inst.edges) core_edges.push_back({e.u, e.v, e.weight});
  artifact.restricted_game = make_game(NeighbourhoodGraph(nprime, false, std::move(core_edges)),
                                       metric, zero_penalties(nprime, points));
  return artifact;
}

StrategyProfile lift_cut(const ReductionArtifact& artifact, const Cut& cut) {
  check_cut(artifact.instance, cut);
  StrategyProfile z;
  z.strategy.assign(artifact.game.graph.players(), 0);
  for (int v = 0; v < artifact.instance.vertices; ++v) {
    z.strategy[artifact.cut_player_map[v]] = artifact.strategy_point[v][cut.side[v]];
  }
  for (std::size_t k = 0; k < artifact.aux_players.size(); ++k) {
    z.strategy[artifact.aux_players[k]] = artifact.aux_preferred[k];
  }
  return z;
}

StrategyProfile lift_cut_restricted(const ReductionArtifact& artifact, const Cut& cut) {
  check_cut(artifact.instance, cut);
  StrategyProfile z;
  z.strategy.assign(artifact.instance.vertices, 0);
  for (int v = 0; v < artifact.instance.vertices; ++v) {
    z.strategy[v] = artifact.strategy_point[v][cut.side[v]];
  }
  return z;
}

std::optional<Cut> project_profile(const ReductionArtifact& artifact, const StrategyProfile& z) {
  if (static_cast<int>(z.strategy.size()) != artifact.game.graph.players()) {
    throw std::invalid_argument("profile length does not match the artifact's game");
  }
  Cut cut;
  cut.side.assign(artifact.instance.vertices, 0);
  for (int v = 0; v < artifact.instance.vertices; ++v) {
    int point = z.strategy[artifact.cut_player_map[v]];
    if (point == artifact.strategy_point[v][0]) {
      cut.side[v] = 0;
    } else if (point == artifact.strategy_point[v][1]) {
      cut.side[v] = 1;
    } else {
      return std::nullopt;
    }
  }
  return cut;
}

Game build_directed_counterexample() {
  // Metric: {0,1,2} x {a,b}, index = 2 * value + parity; distance 1 across
  // parities, 2 within.
  const int points = 6;
  std::vector<std::vector<Rational>> table(points, std::vector<Rational>(points));
  for (int x = 0; x < points; ++x) {
    for (int y = 0; y < points; ++y) {
      if (x == y) {
        table[x][y] = 0;
      } else if (x % 2 != y % 2) {
        table[x][y] = 1;
      } else {
        table[x][y] = 2;
      }
    }
  }

  // Players 0..2 are the cycle players x_0, x_1, x_2; players 3..32 are the
  // auxiliaries, ten per cycle player: five preferring (i,a), five (i,b).
  const int players = 33;
  std::vector<NeighbourhoodGraph::Edge> edges;
  auto penalties =
      std::vector<std::vector<Rational>>(players, std::vector<Rational>(points, Rational(0)));
  for (int i = 0; i < 3; ++i) {
    edges.push_back({i, (i + 1) % 3, 1});
    for (int k = 0; k < 10; ++k) {
      int aux = 3 + 10 * i + k;
      edges.push_back({i, aux, 1});
      penalties[aux][2 * i + (k < 5 ? 0 : 1)] = 1;
    }
  }

  return make_game(NeighbourhoodGraph(players, true, std::move(edges)),
                   MatrixMetric(std::move(table)), std::move(penalties));
}

}  // namespace dpg
