#include "dpg/scenario.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace dpg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"num/den\" string");
}

json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) {
    const Int& num = numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(num);
    }
  }
  return to_string(q);
}

int int_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(where, "expected an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Rational> rational_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(rational_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

int& edge_first(NeighbourhoodGraph::Edge& e) { return e.i; }
int& edge_second(NeighbourhoodGraph::Edge& e) { return e.j; }
Rational& edge_value(NeighbourhoodGraph::Edge& e) { return e.weight; }
int& edge_first(GraphMetricSpec::Edge& e) { return e.u; }
int& edge_second(GraphMetricSpec::Edge& e) { return e.v; }
Rational& edge_value(GraphMetricSpec::Edge& e) { return e.length; }
int& edge_first(MaxCutInstance::Edge& e) { return e.u; }
int& edge_second(MaxCutInstance::Edge& e) { return e.v; }
Rational& edge_value(MaxCutInstance::Edge& e) { return e.weight; }

template <typename Edge>
std::vector<Edge> edges_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of edges");
  std::vector<Edge> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string ctx = where + "[" + std::to_string(k) + "]";
    const json& e = j[k];
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      fail(ctx, "expected [u, v] or [u, v, weight]");
    }
    Edge edge;
    edge_first(edge) = int_from_json(e[0], ctx + "[0]");
    edge_second(edge) = int_from_json(e[1], ctx + "[1]");
    edge_value(edge) = e.size() == 3 ? rational_from_json(e[2], ctx + "[2]") : Rational(1);
    out.push_back(std::move(edge));
  }
  return out;
}

template <typename Edge>
json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (Edge e : edges) {
    json entry = json::array({edge_first(e), edge_second(e)});
    if (edge_value(e) != 1) entry.push_back(rational_to_json(edge_value(e)));
    out.push_back(std::move(entry));
  }
  return out;
}

MetricSpec metric_from_json(const json& j, const std::string& where) {
  const std::string kind = field(j, "kind", where).get<std::string>();
  if (kind == "matrix") {
    const json& rows = field(j, "dist", where);
    if (!rows.is_array()) fail(where + ".dist", "expected an array of rows");
    std::vector<std::vector<Rational>> table;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      table.push_back(rational_array(rows[r], where + ".dist[" + std::to_string(r) + "]"));
    }
    return MatrixMetric(std::move(table));
  }
  if (kind == "graph") {
    GraphMetricSpec spec;
    spec.vertices = int_from_json(field(j, "vertices", where), where + ".vertices");
    spec.edges = edges_from_json<GraphMetricSpec::Edge>(field(j, "edges", where), where + ".edges");
    return spec;
  }
  if (kind == "tree") {
    int root = int_from_json(field(j, "root", where), where + ".root");
    const json& parent_json = field(j, "parent", where);
    if (!parent_json.is_array()) fail(where + ".parent", "expected an array");
    std::vector<int> parent;
    for (std::size_t k = 0; k < parent_json.size(); ++k) {
      parent.push_back(int_from_json(parent_json[k], where + ".parent[" + std::to_string(k) + "]"));
    }
    auto lengths = rational_array(field(j, "lengths", where), where + ".lengths");
    return TreeMetric(root, std::move(parent), std::move(lengths));
  }
  if (kind == "product") {
    const json& factors_json = field(j, "factors", where);
    if (!factors_json.is_array()) fail(where + ".factors", "expected an array");
    std::vector<std::vector<Rational>> factors;
    for (std::size_t t = 0; t < factors_json.size(); ++t) {
      factors.push_back(
          rational_array(factors_json[t], where + ".factors[" + std::to_string(t) + "]"));
    }
    return ProductMetric(std::move(factors));
  }
  fail(where + ".kind", "unknown metric kind '" + kind + "'");
}

json metric_to_json(const MetricSpec& metric) {
  json out;
  if (const auto* m = std::get_if<MatrixMetric>(&metric)) {
    out["kind"] = "matrix";
    json rows = json::array();
    for (const auto& row : m->dist) {
      json r = json::array();
      for (const auto& d : row) r.push_back(rational_to_json(d));
      rows.push_back(std::move(r));
    }
    out["dist"] = std::move(rows);
  } else if (const auto* g = std::get_if<GraphMetricSpec>(&metric)) {
    out["kind"] = "graph";
    out["vertices"] = g->vertices;
    out["edges"] = edges_to_json(g->edges);
  } else if (const auto* t = std::get_if<TreeMetric>(&metric)) {
    out["kind"] = "tree";
    out["root"] = t->root();
    json parent = json::array();
    json lengths = json::array();
    for (int v = 0; v < t->points(); ++v) {
      parent.push_back(t->parent(v));
      lengths.push_back(rational_to_json(t->edge_length(v)));
    }
    out["parent"] = std::move(parent);
    out["lengths"] = std::move(lengths);
  } else {
    const auto& p = std::get<ProductMetric>(metric);
    out["kind"] = "product";
    json factors = json::array();
    for (const auto& coords : p.factors()) {
      json f = json::array();
      for (const auto& c : coords) f.push_back(rational_to_json(c));
      factors.push_back(std::move(f));
    }
    out["factors"] = std::move(factors);
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json doc = parse_json(json_text);
  Scenario scenario;
  if (doc.contains("alpha")) {
    scenario.alpha = rational_from_json(doc["alpha"], "alpha");
  }
  const json& graph = field(doc, "graph", "scenario");
  int players = int_from_json(field(graph, "players", "graph"), "graph.players");
  bool directed = field(graph, "directed", "graph").get<bool>();
  auto edges =
      edges_from_json<NeighbourhoodGraph::Edge>(field(graph, "edges", "graph"), "graph.edges");
  scenario.graph = NeighbourhoodGraph(players, directed, std::move(edges));
  scenario.metric = metric_from_json(field(doc, "metric", "scenario"), "metric");

  const json& players_json = field(doc, "players", "scenario");
  if (!players_json.is_array()) fail("players", "expected an array");
  for (std::size_t k = 0; k < players_json.size(); ++k) {
    const std::string ctx = "players[" + std::to_string(k) + "]";
    const json& p = players_json[k];
    const bool has_pref = p.is_object() && p.contains("preferred");
    const bool has_pen = p.is_object() && p.contains("penalties");
    if (has_pref == has_pen) {
      fail(ctx, "exactly one of 'preferred' and 'penalties' is required");
    }
    if (has_pref) {
      PreferredSpec spec;
      spec.point = int_from_json(p["preferred"], ctx + ".preferred");
      if (p.contains("weight")) {
        spec.weight = rational_from_json(p["weight"], ctx + ".weight");
      }
      scenario.players.emplace_back(std::move(spec));
    } else {
      scenario.players.emplace_back(rational_array(p["penalties"], ctx + ".penalties"));
    }
  }
  return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  json doc;
  if (scenario.alpha) doc["alpha"] = rational_to_json(*scenario.alpha);
  doc["graph"] = {{"directed", scenario.graph.directed()},
                  {"players", scenario.graph.players()},
                  {"edges", edges_to_json(scenario.graph.edges())}};
  doc["metric"] = metric_to_json(scenario.metric);
  json players = json::array();
  for (const auto& p : scenario.players) {
    if (const auto* pref = std::get_if<PreferredSpec>(&p)) {
      json entry = {{"preferred", pref->point}};
      if (pref->weight) entry["weight"] = rational_to_json(*pref->weight);
      players.push_back(std::move(entry));
    } else {
      json table = json::array();
      for (const auto& w : std::get<std::vector<Rational>>(p)) {
        table.push_back(rational_to_json(w));
      }
      players.push_back({{"penalties", std::move(table)}});
    }
  }
  doc["players"] = std::move(players);
  return doc.dump(2) + "\n";
}

Game scenario_to_game(const Scenario& scenario) {
  Metric metric;
  if (const auto* m = std::get_if<MatrixMetric>(&scenario.metric)) {
    auto violations = verify_metric_axioms(*m);
    if (!violations.empty()) {
      fail("metric", violations.front().describe());
    }
    metric = *m;
  } else if (const auto* g = std::get_if<GraphMetricSpec>(&scenario.metric)) {
    metric = graph_to_matrix(*g);
  } else if (const auto* t = std::get_if<TreeMetric>(&scenario.metric)) {
    metric = *t;
  } else {
    metric = std::get<ProductMetric>(scenario.metric);
  }

  const int p = point_count(metric);
  if (static_cast<int>(scenario.players.size()) != scenario.graph.players()) {
    fail("players", "player section length does not match graph.players");
  }

  if (scenario.alpha) {
    std::vector<int> preferred;
    for (std::size_t k = 0; k < scenario.players.size(); ++k) {
      const auto* pref = std::get_if<PreferredSpec>(&scenario.players[k]);
      if (!pref) {
        fail("players[" + std::to_string(k) + "]",
             "alpha-form scenarios require 'preferred' entries");
      }
      if (pref->weight) {
        fail("players[" + std::to_string(k) + "]",
             "alpha-form scenarios must not set per-player weights");
      }
      preferred.push_back(pref->point);
    }
    return from_alpha_form(scenario.graph, std::move(metric), std::move(preferred),
                           *scenario.alpha);
  }

  std::vector<std::vector<Rational>> penalties;
  for (std::size_t k = 0; k < scenario.players.size(); ++k) {
    const std::string ctx = "players[" + std::to_string(k) + "]";
    if (const auto* pref = std::get_if<PreferredSpec>(&scenario.players[k])) {
      if (!pref->weight) fail(ctx, "'weight' is required without scenario alpha");
      if (pref->point < 0 || pref->point >= p) fail(ctx, "preferred point out of range");
      std::vector<Rational> table(p, Rational(0));
      table[pref->point] = *pref->weight;
      penalties.push_back(std::move(table));
    } else {
      penalties.push_back(std::get<std::vector<Rational>>(scenario.players[k]));
    }
  }
  return make_game(scenario.graph, std::move(metric), std::move(penalties));
}

Scenario scenario_from_game(const Game& game) {
  Scenario scenario;
  if (const auto* m = std::get_if<MatrixMetric>(&game.metric)) {
    scenario.metric = *m;
  } else if (const auto* t = std::get_if<TreeMetric>(&game.metric)) {
    scenario.metric = *t;
  } else {
    scenario.metric = std::get<ProductMetric>(game.metric);
  }

  if (game.alpha && game.preferred) {
    scenario.alpha = game.alpha;
    std::vector<NeighbourhoodGraph::Edge> edges;
    for (const auto& e : game.graph.edges()) edges.push_back({e.i, e.j, 1});
    scenario.graph =
        NeighbourhoodGraph(game.graph.players(), game.graph.directed(), std::move(edges));
    for (int point : *game.preferred) {
      scenario.players.emplace_back(PreferredSpec{point, std::nullopt});
    }
    return scenario;
  }

  scenario.graph = game.graph;
  for (const auto& table : game.penalties) {
    int nonzero = -1;
    int count = 0;
    for (int v = 0; v < static_cast<int>(table.size()); ++v) {
      if (table[v] != 0) {
        nonzero = v;
        ++count;
      }
    }
    if (count == 1) {
      scenario.players.emplace_back(PreferredSpec{nonzero, table[nonzero]});
    } else {
      scenario.players.emplace_back(table);
    }
  }
  return scenario;
}

MaxCutInstance parse_maxcut(const std::string& json_text) {
  json doc = parse_json(json_text);
  MaxCutInstance inst;
  inst.vertices = int_from_json(field(doc, "vertices", "maxcut"), "vertices");
  inst.edges = edges_from_json<MaxCutInstance::Edge>(field(doc, "edges", "maxcut"), "edges");
  inst.validate();
  return inst;
}

std::string serialize_maxcut(const MaxCutInstance& inst) {
  json doc = {{"vertices", inst.vertices}, {"edges", edges_to_json(inst.edges)}};
  return doc.dump(2) + "\n";
}

StrategyProfile parse_profile(const std::string& json_text) {
  json doc = parse_json(json_text);
  const json& strategies = field(doc, "strategies", "profile");
  if (!strategies.is_array()) fail("profile.strategies", "expected an array");
  StrategyProfile z;
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    z.strategy.push_back(int_from_json(strategies[k], "strategies[" + std::to_string(k) + "]"));
  }
  return z;
}

std::string serialize_profile(const StrategyProfile& profile) {
  json doc = {{"strategies", profile.strategy}};
  return doc.dump() + "\n";
}

std::string serialize_reduction_map(const ReductionArtifact& artifact) {
  json doc;
  doc["variant"] = artifact.variant == ReductionVariant::Unweighted ? "unweighted" : "weighted";
  doc["W"] = rational_to_json(artifact.W);
  if (artifact.alpha) doc["alpha"] = rational_to_json(*artifact.alpha);
  doc["cut_player_map"] = artifact.cut_player_map;
  json strategy_map = json::array();
  for (const auto& pair : artifact.strategy_point) {
    strategy_map.push_back(json::array({pair[0], pair[1]}));
  }
  doc["strategy_map"] = std::move(strategy_map);
  doc["aux_players"] = artifact.aux_players;
  doc["aux_preferred"] = artifact.aux_preferred;
  if (!artifact.colouring.empty()) doc["colouring"] = artifact.colouring;
  return doc.dump(2) + "\n";
}

std::string graph_to_dot(const NeighbourhoodGraph& graph) {
  std::ostringstream out;
  const char* arrow = graph.directed() ? " -> " : " -- ";
  out << (graph.directed() ? "digraph" : "graph") << " neighbourhood {\n";
  for (int i = 0; i < graph.players(); ++i) {
    out << "  p" << i << ";\n";
  }
  for (const auto& e : graph.edges()) {
    out << "  p" << e.i << arrow << "p" << e.j << " [label=\"" << to_string(e.weight) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string metric_to_dot(const Metric& metric) {
  MatrixMetric matrix = to_matrix(metric);
  std::ostringstream out;
  out << "graph metric {\n";
  for (int x = 0; x < matrix.points(); ++x) {
    out << "  s" << x << ";\n";
  }
  for (int x = 0; x < matrix.points(); ++x) {
    for (int y = x + 1; y < matrix.points(); ++y) {
      out << "  s" << x << " -- s" << y << " [label=\"" << to_string(matrix.dist[x][y])
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dpg
