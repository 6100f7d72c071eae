#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gsr/cycles.hpp"
#include "gsr/graph.hpp"

namespace gsr::testing {

// The 9-vertex, 10-edge example graph, 1-based as in an edge-list file.
inline constexpr const char *kExampleGraphText =
    "# example graph: three cycles of lengths 4, 6 and 8\n"
    "1 2\n2 3\n3 4\n1 4\n3 5\n5 6\n6 7\n8 7\n8 2\n9 6\n";

inline DirectedGraph example_graph() { return parse_graph(kExampleGraphText); }

inline Matrix example_incidence() {
  Matrix A(9, 10);
  A << -1, 0, 0, -1, 0, 0, 0, 0, 0, 0,
        1, -1, 0, 0, 0, 0, 0, 0, 1, 0,
        0, 1, -1, 0, -1, 0, 0, 0, 0, 0,
        0, 0, 1, 1, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 1, -1, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 1, -1, 0, 0, 1,
        0, 0, 0, 0, 0, 0, 1, 1, 0, 0,
        0, 0, 0, 0, 0, 0, 0, -1, -1, 0,
        0, 0, 0, 0, 0, 0, 0, 0, 0, -1;
  return A;
}

inline Vector example_w1() { return (Vector(10) << 1, 1, 1, -1, 0, 0, 0, 0, 0, 0).finished(); }
inline Vector example_w2() { return (Vector(10) << 0, 1, 0, 0, 1, 1, 1, -1, 1, 0).finished(); }
inline Vector example_w3() { return (Vector(10) << 1, 0, 1, -1, -1, -1, -1, 1, -1, 0).finished(); }

// Converts 1-based edge ids to a 0-based support.
inline SupportSet one_based(std::initializer_list<Index> ids) {
  std::vector<Index> v;
  for (Index j : ids) v.push_back(j - 1);
  return SupportSet(std::move(v));
}

/// Test-only cycle oracle: every vertex subset, every ordering with the
/// smallest vertex first and second < last, kept when consecutive vertices
/// are adjacent. Exponential; use on graphs with <= 8 vertices.
inline std::set<std::vector<Index>> brute_force_cycles(const DirectedGraph &g) {
  std::set<std::vector<Index>> out;
  const Index m = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Index> verts;
    for (Index v = 0; v < m; ++v)
      if (mask >> v & 1u) verts.push_back(v);
    if (verts.size() < 3) continue;
    std::vector<Index> rest(verts.begin() + 1, verts.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<Index> cyc{verts.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
        ok = g.edge_between(cyc[i], cyc[(i + 1) % cyc.size()]).has_value();
      }
      if (ok) out.insert(cyc);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

/// Random simple graph on m vertices with each unordered pair present with
/// probability p and a random orientation.
inline DirectedGraph random_graph(Index m, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution keep(p), flip(0.5);
  std::vector<Edge> edges;
  for (Index u = 0; u < m; ++u)
    for (Index v = u + 1; v < m; ++v)
      if (keep(rng)) edges.push_back(flip(rng) ? Edge{u, v} : Edge{v, u});
  std::shuffle(edges.begin(), edges.end(), rng);
  return DirectedGraph(m, std::move(edges));
}

/// Random connected simple graph: a random spanning tree plus extra edges,
/// with at most max_edges edges in total.
inline DirectedGraph random_connected_graph(Index m, Index max_edges, std::mt19937_64 &rng) {
  std::vector<Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution flip(0.5);
  std::set<std::pair<Index, Index>> used;
  std::vector<Edge> edges;
  auto add = [&](Index u, Index v) {
    if (u == v || !used.insert({std::min(u, v), std::max(u, v)}).second) return;
    edges.push_back(flip(rng) ? Edge{u, v} : Edge{v, u});
  };
  for (Index i = 1; i < m; ++i) {
    std::uniform_int_distribution<Index> parent(0, i - 1);
    add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(parent(rng))]);
  }
  std::uniform_int_distribution<Index> any(0, m - 1);
  for (int attempts = 0; attempts < 200 && static_cast<Index>(edges.size()) < max_edges; ++attempts) {
    add(any(rng), any(rng));
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return DirectedGraph(m, std::move(edges));
}

/// Rank with a relative pivot threshold, independent of graph structure.
inline Index numeric_rank(const Matrix &A) {
  if (A.size() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(A);
  lu.setThreshold(1e-9);
  return lu.rank();
}

} // namespace gsr::testing
