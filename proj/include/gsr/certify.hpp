#pragma once

#include <optional>
#include <vector>

#include "gsr/cycles.hpp"
#include "gsr/graph.hpp"

namespace gsr {

class DisconnectedGraph : public GraphError {
public:
  DisconnectedGraph() : GraphError("graph is not connected (use the per-component policy)") {}
};

class EmptySupport : public GraphError {
public:
  EmptySupport() : GraphError("support is empty: the zero signal is trivially recoverable") {}
};

enum class ComponentPolicy {
  require_connected, // throw DisconnectedGraph
  per_component,     // certify each component; the smallest girth decides
};

/// Spark of an incidence matrix, which equals the girth of its graph.
Girth spark_incidence(const DirectedGraph &g);

/// Nullspace constant min{s/g, 1}; 0 for forests and for s = 0.
double nullspace_constant_incidence(const DirectedGraph &g, Index s);

struct NupCertificate {
  Index order = 0;
  Girth girth = Girth::infinite();
  double nullspace_constant = 0.0;
  bool holds = true;
  std::optional<SimpleCycle> witness; // a shortest cycle when the certificate fails
};

/// Nullspace property of order s: holds iff the graph is acyclic or 2s < girth.
NupCertificate certify_nup(const DirectedGraph &g, Index s,
                           ComponentPolicy policy = ComponentPolicy::require_connected);

struct SupportCertificate {
  SupportSet support;
  bool holds = false;
  /// max over simple cycles C of |S n C| / |C|; an upper bound when conservative.
  double worst_ratio = 0.0;
  std::optional<SimpleCycle> witness;
  /// Cycle enumeration hit its cap and the girth bound |S| < g/2 was used.
  bool conservative = false;
};

/// Every signal supported in S is the unique l1 minimiser iff S takes fewer
/// than half the edges of every simple cycle.
SupportCertificate certify_support(const DirectedGraph &g, const SupportSet &support,
                                   std::size_t cap = kDefaultCycleCap);

/// Same test against an already enumerated cycle list.
SupportCertificate certify_support(const SupportSet &support, const std::vector<SimpleCycle> &cycles);

} // namespace gsr
