#include "dpg/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpg {

namespace {

void check_point(int p, int count, const char* what) {
  if (p < 0 || p >= count) {
    throw std::out_of_range(std::string(what) + " point index " + std::to_string(p) +
                            " out of range [0," + std::to_string(count) + ")");
  }
}

}  // namespace

MatrixMetric::MatrixMetric(std::vector<std::vector<Rational>> table) : dist(std::move(table)) {
  for (const auto& row : dist) {
    if (row.size() != dist.size()) {
      throw std::invalid_argument("distance table must be square");
    }
  }
}

const Rational& MatrixMetric::distance(int x, int y) const {
  check_point(x, points(), "matrix");
  check_point(y, points(), "matrix");
  return dist[x][y];
}

TreeMetric::TreeMetric(int root, std::vector<int> parent, std::vector<Rational> edge_length)
    : root_(root), parent_(std::move(parent)), edge_length_(std::move(edge_length)) {
  const int n = points();
  if (n == 0) throw std::invalid_argument("tree metric needs at least one vertex");
  if (root_ < 0 || root_ >= n) throw std::invalid_argument("tree root out of range");
  if (parent_[root_] != root_) throw std::invalid_argument("parent[root] must be root");
  if (static_cast<int>(edge_length_.size()) != n) {
    throw std::invalid_argument("edge_length must have one entry per vertex");
  }
  edge_length_[root_] = 0;
  children_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    if (parent_[v] < 0 || parent_[v] >= n) throw std::invalid_argument("parent index out of range");
    if (v != root_) {
      if (parent_[v] == v) throw std::invalid_argument("non-root vertex is its own parent");
      if (edge_length_[v] <= 0) throw std::invalid_argument("tree edge lengths must be positive");
      children_[parent_[v]].push_back(v);
    }
  }
  for (auto& c : children_) std::sort(c.begin(), c.end());

  // Every vertex must reach the root; a walk longer than n vertices is a cycle.
  depth_.assign(n, -1);
  depth_[root_] = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<int> chain;
    int u = v;
    while (depth_[u] < 0) {
      chain.push_back(u);
      u = parent_[u];
      if (static_cast<int>(chain.size()) > n) {
        throw std::invalid_argument("parent links contain a cycle");
      }
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth_[*it] = depth_[parent_[*it]] + 1;
    }
  }
}

Rational TreeMetric::distance(int u, int v) const {
  check_point(u, points(), "tree");
  check_point(v, points(), "tree");
  Rational total = 0;
  while (depth_[u] > depth_[v]) {
    total += edge_length_[u];
    u = parent_[u];
  }
  while (depth_[v] > depth_[u]) {
    total += edge_length_[v];
    v = parent_[v];
  }
  while (u != v) {
    total += edge_length_[u] + edge_length_[v];
    u = parent_[u];
    v = parent_[v];
  }
  return total;
}

std::vector<int> TreeMetric::path(int u, int v) const {
  check_point(u, points(), "tree");
  check_point(v, points(), "tree");
  std::vector<int> from_u, from_v;
  int a = u, b = v;
  while (depth_[a] > depth_[b]) {
    from_u.push_back(a);
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    from_v.push_back(b);
    b = parent_[b];
  }
  while (a != b) {
    from_u.push_back(a);
    from_v.push_back(b);
    a = parent_[a];
    b = parent_[b];
  }
  from_u.push_back(a);
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

ProductMetric::ProductMetric(std::vector<std::vector<Rational>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product metric needs at least one factor");
  for (const auto& coords : factors_) {
    if (coords.empty()) throw std::invalid_argument("product factor must be nonempty");
    for (std::size_t i = 1; i < coords.size(); ++i) {
      if (!(coords[i - 1] < coords[i])) {
        throw std::invalid_argument("factor coordinates must strictly increase");
      }
    }
    point_count_ *= static_cast<int>(coords.size());
  }
}

std::vector<int> ProductMetric::coords_of(int point) const {
  check_point(point, point_count_, "product");
  std::vector<int> coords(factors_.size());
  for (int t = factor_count() - 1; t >= 0; --t) {
    const int m = static_cast<int>(factors_[t].size());
    coords[t] = point % m;
    point /= m;
  }
  return coords;
}

int ProductMetric::index_of(const std::vector<int>& coords) const {
  if (coords.size() != factors_.size()) {
    throw std::invalid_argument("coordinate count does not match factor count");
  }
  int idx = 0;
  for (int t = 0; t < factor_count(); ++t) {
    const int m = static_cast<int>(factors_[t].size());
    check_point(coords[t], m, "factor");
    idx = idx * m + coords[t];
  }
  return idx;
}

Rational ProductMetric::distance(int x, int y) const {
  auto cx = coords_of(x);
  auto cy = coords_of(y);
  Rational total = 0;
  for (int t = 0; t < factor_count(); ++t) {
    const Rational& a = factors_[t][cx[t]];
    const Rational& b = factors_[t][cy[t]];
    total += a < b ? b - a : a - b;
  }
  return total;
}

int point_count(const Metric& metric) {
  return std::visit([](const auto& m) { return m.points(); }, metric);
}

Rational distance(const Metric& metric, int x, int y) {
  return std::visit([&](const auto& m) { return Rational(m.distance(x, y)); }, metric);
}

MatrixMetric to_matrix(const Metric& metric) {
  const int p = point_count(metric);
  std::vector<std::vector<Rational>> table(p, std::vector<Rational>(p));
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      table[x][y] = distance(metric, x, y);
    }
  }
  return MatrixMetric(std::move(table));
}

std::string AxiomViolation::describe() const {
  switch (axiom) {
    case Axiom::Identity:
      return "identity violated at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Axiom::Positivity:
      return "positivity violated at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Axiom::Symmetry:
      return "symmetry violated at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Axiom::Triangle:
      return "triangle inequality violated at (" + std::to_string(x) + "," + std::to_string(y) +
             "," + std::to_string(z) + ")";
  }
  return "";
}

std::vector<AxiomViolation> verify_metric_axioms(const MatrixMetric& metric) {
  using Axiom = AxiomViolation::Axiom;
  std::vector<AxiomViolation> out;
  const int p = metric.points();
  for (int x = 0; x < p; ++x) {
    if (metric.dist[x][x] != 0) out.push_back({Axiom::Identity, x, x, 0});
  }
  for (int x = 0; x < p; ++x) {
    for (int y = x + 1; y < p; ++y) {
      if (metric.dist[x][y] != metric.dist[y][x]) {
        out.push_back({Axiom::Symmetry, x, y, 0});
      } else if (metric.dist[x][y] <= 0) {
        out.push_back({Axiom::Positivity, x, y, 0});
      }
    }
  }
  for (int x = 0; x < p; ++x) {
    for (int y = x + 1; y < p; ++y) {
      for (int z = 0; z < p; ++z) {
        if (z == x || z == y) continue;
        if (metric.dist[x][y] > metric.dist[x][z] + metric.dist[z][y]) {
          out.push_back({Axiom::Triangle, x, y, z});
        }
      }
    }
  }
  return out;
}

MatrixMetric graph_to_matrix(const GraphMetricSpec& spec) {
  const int n = spec.vertices;
  if (n <= 0) throw std::invalid_argument("graph metric needs at least one vertex");
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  for (const auto& e : spec.edges) {
    check_point(e.u, n, "graph");
    check_point(e.v, n, "graph");
    if (e.u == e.v) throw std::invalid_argument("graph metric: self-loop");
    if (e.length <= 0) throw std::invalid_argument("graph metric: edge length must be positive");
    adj[e.u].emplace_back(e.v, e.length);
    adj[e.v].emplace_back(e.u, e.length);
  }

  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  std::vector<bool> reached(n);
  for (int s = 0; s < n; ++s) {
    std::fill(reached.begin(), reached.end(), false);
    auto& row = table[s];
    std::fill(row.begin(), row.end(), Rational(0));
    reached[s] = true;
    // Repeated relaxation; lengths are positive so n-1 rounds suffice.
    bool changed = true;
    for (int round = 0; round < n - 1 && changed; ++round) {
      changed = false;
      for (int u = 0; u < n; ++u) {
        if (!reached[u]) continue;
        for (const auto& [v, len] : adj[u]) {
          Rational cand = row[u] + len;
          if (!reached[v] || cand < row[v]) {
            reached[v] = true;
            row[v] = cand;
            changed = true;
          }
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!reached[v]) throw std::invalid_argument("graph metric: graph is disconnected");
    }
  }
  return MatrixMetric(std::move(table));
}

std::vector<int> tree_medians(const TreeMetric& tree, const std::vector<Rational>& node_weight) {
  const int n = tree.points();
  if (static_cast<int>(node_weight.size()) != n) {
    throw std::invalid_argument("tree_medians: one weight per vertex required");
  }
  Rational total = 0;
  for (const auto& w : node_weight) {
    if (w < 0) throw std::invalid_argument("tree_medians: weights must be nonnegative");
    total += w;
  }
  if (total == 0) throw std::invalid_argument("tree_medians: total weight must be positive");

  // Subtree weights in one pass, deepest-first.
  std::vector<int> order;
  order.reserve(n);
  order.push_back(tree.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : tree.children(order[i])) order.push_back(c);
  }
  std::vector<Rational> subtree(node_weight);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != tree.root()) subtree[tree.parent(*it)] += subtree[*it];
  }

  // u is a median iff every component of T-u (each child subtree plus the
  // remainder through the parent) weighs at most total/2.
  std::vector<int> medians;
  for (int u = 0; u < n; ++u) {
    bool ok = 2 * (total - subtree[u]) <= total;
    for (int c : tree.children(u)) {
      if (2 * subtree[c] > total) ok = false;
    }
    if (ok) medians.push_back(u);
  }
  return medians;
}

std::vector<Rational> project_penalties(const ProductMetric& metric,
                                        const std::vector<Rational>& penalty, int factor) {
  if (factor < 0 || factor >= metric.factor_count()) {
    throw std::out_of_range("project_penalties: factor index out of range");
  }
  if (static_cast<int>(penalty.size()) != metric.points()) {
    throw std::invalid_argument("project_penalties: one penalty per product point required");
  }
  std::vector<Rational> out(metric.factor(factor).size(), Rational(0));
  for (int v = 0; v < metric.points(); ++v) {
    if (penalty[v] == 0) continue;
    out[metric.coords_of(v)[factor]] += penalty[v];
  }
  return out;
}

TreeMetric path_as_tree(const std::vector<Rational>& coords) {
  const int m = static_cast<int>(coords.size());
  std::vector<int> parent(m);
  std::vector<Rational> lengths(m, Rational(0));
  for (int i = 1; i < m; ++i) {
    parent[i] = i - 1;
    lengths[i] = coords[i] - coords[i - 1];
  }
  return TreeMetric(0, std::move(parent), std::move(lengths));
}

}  // namespace dpg
