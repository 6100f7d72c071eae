#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gsr {

using Index = std::ptrdiff_t;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Raised for malformed edge lists and graph invariant violations.
class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Index tail = 0;
  Index head = 0;
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Simple directed graph: no self-loops and at most one edge per unordered
/// vertex pair. Edge ids are positions in `edges()`. Immutable once built.
class DirectedGraph {
public:
  DirectedGraph() = default;
  /// Throws GraphError if any invariant is violated.
  DirectedGraph(Index vertex_count, std::vector<Edge> edges);

  Index vertex_count() const { return vertex_count_; }
  Index edge_count() const { return static_cast<Index>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(Index id) const { return edges_[static_cast<std::size_t>(id)]; }

  /// Undirected neighbourhood of `v` as (neighbour, edge id) pairs.
  const std::vector<std::pair<Index, Index>> &neighbors(Index v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  /// Id of the edge joining u and v in either direction.
  std::optional<Index> edge_between(Index u, Index v) const;

private:
  Index vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<Index, Index>>> adjacency_;
  std::map<std::pair<Index, Index>, Index> pair_index_;
};

/// Sorted, duplicate-free set of edge ids.
class SupportSet {
public:
  SupportSet() = default;
  explicit SupportSet(std::vector<Index> ids);

  /// Nonzero positions of `x` (|x_j| > tol).
  static SupportSet of(const Vector &x, double tol = 0.0);
  static SupportSet all(Index n);

  const std::vector<Index> &ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Index id) const;
  /// Throws GraphError if any id lies outside [0, n).
  void validate(Index n) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const SupportSet &, const SupportSet &) = default;

private:
  std::vector<Index> ids_;
};

/// Dense m x n incidence matrix: column j holds -1 at tail(e_j), +1 at head(e_j).
class IncidenceMatrix {
public:
  explicit IncidenceMatrix(const DirectedGraph &g);

  const Matrix &matrix() const { return entries_; }
  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }
  double operator()(Index i, Index j) const { return entries_(i, j); }

private:
  Matrix entries_;
};

IncidenceMatrix incidence_matrix(const DirectedGraph &g);

struct Components {
  Index count = 0;
  std::vector<Index> label; // per vertex, labels in [0, count)
};

/// Connected components of the underlying undirected graph.
Components connected_components(const DirectedGraph &g);

struct Subgraph {
  DirectedGraph graph;
  std::vector<Index> edge_to_parent;   // subgraph edge id -> original edge id
  std::vector<Index> vertex_to_parent; // subgraph vertex id -> original vertex id
};

/// Subgraph made of the edges in `support`. Vertices with no retained edge
/// are dropped; surviving vertices keep their relative order.
Subgraph edge_subgraph(const DirectedGraph &g, const SupportSet &support);

/// Parses the edge-list format: one "tail head" pair per line, 1-based;
/// '#' starts a comment line; an optional "p <m> <n>" header fixes the counts.
DirectedGraph parse_graph(std::string_view text);
DirectedGraph load_graph(const std::string &path);

/// Inverse of parse_graph (1-based, with a "p" header).
std::string format_graph(const DirectedGraph &g);

} // namespace gsr
