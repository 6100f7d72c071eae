#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gsr/graph.hpp"
#include "gsr/parallel.hpp"

namespace gsr {

class CycleCapExceeded : public std::runtime_error {
public:
  explicit CycleCapExceeded(std::size_t cap)
      : std::runtime_error("graph has more than " + std::to_string(cap) + " simple cycles"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

/// Girth of a graph; infinite for forests.
class Girth {
public:
  static Girth infinite() { return Girth(); }
  static Girth finite(Index length) { return Girth(length); }

  bool is_infinite() const { return !length_.has_value(); }
  /// Precondition: !is_infinite().
  Index value() const { return *length_; }

  friend bool operator==(const Girth &, const Girth &) = default;

private:
  Girth() = default;
  explicit Girth(Index length) : length_(length) {}
  std::optional<Index> length_;
};

/// A simple cycle of the underlying undirected graph, stored canonically:
/// the smallest vertex first, and the second vertex smaller than the last.
/// edges[i] joins vertices[i] and vertices[i+1 mod L]; orientations[i] is +1
/// when that edge is traversed tail -> head.
struct SimpleCycle {
  std::vector<Index> vertices;
  std::vector<Index> edges;
  std::vector<int> orientations;

  Index length() const { return static_cast<Index>(edges.size()); }

  /// Builds the canonical cycle through `vertices` (any rotation/direction).
  /// Throws GraphError if the sequence is not a simple cycle of `g`.
  static SimpleCycle from_vertices(const DirectedGraph &g, std::vector<Index> vertices);

  friend bool operator==(const SimpleCycle &, const SimpleCycle &) = default;
  friend auto operator<=>(const SimpleCycle &a, const SimpleCycle &b) { return a.vertices <=> b.vertices; }
};

/// Signed indicator w(C) of a cycle, optionally scaled to unit l1 norm.
struct CycleVector {
  Vector coords;
  double norm1 = 0.0;
};

/// Exact girth by breadth-first search from every vertex, O(m n).
Girth girth(const DirectedGraph &g, Exec exec = Exec::parallel);

/// A shortest simple cycle, or nullopt for forests. Ties are broken
/// deterministically, so serial and parallel runs return the same cycle.
std::optional<SimpleCycle> shortest_cycle(const DirectedGraph &g, Exec exec = Exec::parallel);

inline constexpr std::size_t kDefaultCycleCap = 100000;

/// Every simple cycle of the underlying undirected graph, once each, in
/// canonical form (Johnson's circuit search on the symmetric digraph).
/// Throws CycleCapExceeded when more than `cap` cycles exist.
std::vector<SimpleCycle> enumerate_simple_cycles(const DirectedGraph &g, std::size_t cap = kDefaultCycleCap);

CycleVector cycle_vector(const SimpleCycle &c, const DirectedGraph &g, bool normalized = false);

/// n - m + k.
Index cycle_space_dimension(const DirectedGraph &g);

} // namespace gsr
