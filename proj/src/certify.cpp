#include "gsr/certify.hpp"

#include <algorithm>

namespace gsr {

Girth spark_incidence(const DirectedGraph &g) { return girth(g); }

double nullspace_constant_incidence(const DirectedGraph &g, Index s) {
  if (s <= 0) return 0.0;
  const Girth gi = girth(g);
  if (gi.is_infinite()) return 0.0;
  return std::min(static_cast<double>(s) / static_cast<double>(gi.value()), 1.0);
}

NupCertificate certify_nup(const DirectedGraph &g, Index s, ComponentPolicy policy) {
  if (s < 1) throw GraphError("certify_nup: sparsity order must be at least 1");
  if (policy == ComponentPolicy::require_connected && connected_components(g).count > 1) {
    throw DisconnectedGraph();
  }
  // Cycles live inside one component, so the global girth is the minimum
  // over components and the per-component verdicts combine through it.
  NupCertificate cert;
  cert.order = s;
  cert.girth = girth(g);
  if (cert.girth.is_infinite()) return cert;
  const Index gv = cert.girth.value();
  cert.nullspace_constant = std::min(static_cast<double>(s) / static_cast<double>(gv), 1.0);
  cert.holds = 2 * s < gv;
  if (!cert.holds) cert.witness = shortest_cycle(g);
  return cert;
}

SupportCertificate certify_support(const SupportSet &support, const std::vector<SimpleCycle> &cycles) {
  if (support.empty()) throw EmptySupport();
  SupportCertificate cert;
  cert.support = support;
  for (const SimpleCycle &c : cycles) {
    const auto hits = std::count_if(c.edges.begin(), c.edges.end(), [&](Index e) { return support.contains(e); });
    const double ratio = static_cast<double>(hits) / static_cast<double>(c.length());
    if (ratio > cert.worst_ratio) {
      cert.worst_ratio = ratio;
      cert.witness = c;
    }
  }
  cert.holds = cert.worst_ratio < 0.5;
  return cert;
}

SupportCertificate certify_support(const DirectedGraph &g, const SupportSet &support, std::size_t cap) {
  if (support.empty()) throw EmptySupport();
  support.validate(g.edge_count());
  try {
    return certify_support(support, enumerate_simple_cycles(g, cap));
  } catch (const CycleCapExceeded &) {
    SupportCertificate cert;
    cert.support = support;
    cert.conservative = true;
    const Girth gi = girth(g);
    const auto size = static_cast<Index>(support.size());
    if (gi.is_infinite()) {
      cert.holds = true;
    } else {
      cert.worst_ratio = std::min(static_cast<double>(size) / static_cast<double>(gi.value()), 1.0);
      cert.holds = 2 * size < gi.value();
    }
    return cert;
  }
}

} // namespace gsr
