#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dpg/rational.hpp"

namespace dpg {

/// Finite metric space given by an explicit distance table.
/// Construction only checks the shape; verify_metric_axioms checks the axioms.
struct MatrixMetric {
  std::vector<std::vector<Rational>> dist;

  MatrixMetric() = default;
  explicit MatrixMetric(std::vector<std::vector<Rational>> table);

  int points() const { return static_cast<int>(dist.size()); }
  const Rational& distance(int x, int y) const;

  bool operator==(const MatrixMetric&) const = default;
};

/// Connected undirected graph with positive edge lengths; induces the
/// shortest-path metric on its vertices.
struct GraphMetricSpec {
  struct Edge {
    int u = 0;
    int v = 0;
    Rational length;
    bool operator==(const Edge&) const = default;
  };

  int vertices = 0;
  std::vector<Edge> edges;

  bool operator==(const GraphMetricSpec&) const = default;
};

/// Rooted tree with positive edge lengths; distance is the sum of lengths on
/// the unique path. parent[root] == root; edge_length[root] is ignored (0).
class TreeMetric {
 public:
  TreeMetric(int root, std::vector<int> parent, std::vector<Rational> edge_length);

  int points() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_.at(v); }
  const Rational& edge_length(int v) const { return edge_length_.at(v); }
  const std::vector<int>& children(int v) const { return children_.at(v); }

  Rational distance(int u, int v) const;
  /// Vertices on the u--v path, inclusive of both endpoints.
  std::vector<int> path(int u, int v) const;

  bool operator==(const TreeMetric& o) const {
    return root_ == o.root_ && parent_ == o.parent_ && edge_length_ == o.edge_length_;
  }

 private:
  int root_;
  std::vector<int> parent_;
  std::vector<Rational> edge_length_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
};

/// Cartesian product of path metrics. Factor t is a strictly increasing list
/// of coordinates; the point set is the full product, indexed factor-0-major
/// (the last factor varies fastest). d(x,y) = sum over factors of |x_t - y_t|.
class ProductMetric {
 public:
  explicit ProductMetric(std::vector<std::vector<Rational>> factors);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const std::vector<Rational>& factor(int t) const { return factors_.at(t); }
  const std::vector<std::vector<Rational>>& factors() const { return factors_; }
  int points() const { return point_count_; }

  std::vector<int> coords_of(int point) const;
  int index_of(const std::vector<int>& coords) const;
  Rational distance(int x, int y) const;

  bool operator==(const ProductMetric& o) const { return factors_ == o.factors_; }

 private:
  std::vector<std::vector<Rational>> factors_;
  int point_count_ = 1;
};

using Metric = std::variant<MatrixMetric, TreeMetric, ProductMetric>;

int point_count(const Metric& metric);
Rational distance(const Metric& metric, int x, int y);

/// Materializes any metric form as an explicit distance table.
MatrixMetric to_matrix(const Metric& metric);

struct AxiomViolation {
  enum class Axiom { Identity, Positivity, Symmetry, Triangle };
  Axiom axiom;
  int x = 0;
  int y = 0;
  int z = 0;  // triangle witness only
  std::string describe() const;
};

/// Empty iff identity, positivity, symmetry and the triangle inequality all
/// hold. Pairs are reported once (x < y); triangle witnesses as (x, y, z)
/// with d(x,y) > d(x,z) + d(z,y).
std::vector<AxiomViolation> verify_metric_axioms(const MatrixMetric& metric);

/// All-pairs shortest paths by single-source relaxation from each vertex.
/// Throws on a disconnected graph.
MatrixMetric graph_to_matrix(const GraphMetricSpec& spec);

/// Exactly the vertices u such that every component of T-u carries at most
/// half of the total node weight; these are the minimizers of
/// c(u) = sum_v w(v) d(u,v). Throws if all weights are zero.
std::vector<int> tree_medians(const TreeMetric& tree, const std::vector<Rational>& node_weight);

/// Sum of penalty mass over product points sharing each factor-t coordinate.
std::vector<Rational> project_penalties(const ProductMetric& metric,
                                        const std::vector<Rational>& penalty, int factor);

/// A path metric (increasing coordinates) as a tree rooted at index 0.
TreeMetric path_as_tree(const std::vector<Rational>& coords);

}  // namespace dpg
