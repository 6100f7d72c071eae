#include "gsr/recover.hpp"

#include <algorithm>

namespace gsr {

SparseSignal SparseSignal::from_values(Vector values) {
  SparseSignal s;
  s.support = SupportSet::of(values);
  s.values = std::move(values);
  return s;
}

std::string_view to_string(RecoveryMethod m) {
  return m == RecoveryMethod::full_l1 ? "l1" : "subgraph";
}

std::string_view to_string(Diagnostic d) {
  switch (d) {
  case Diagnostic::none: return "none";
  case Diagnostic::reduced_system_infeasible: return "reduced_system_infeasible";
  case Diagnostic::solver_failure: return "solver_failure";
  }
  return "unknown";
}

namespace {

void check_lengths(const DirectedGraph &g, const Vector &y, const std::optional<SparseSignal> &truth) {
  if (y.size() != g.vertex_count()) throw std::invalid_argument("measurement vector must have one entry per vertex");
  if (truth && truth->values.size() != g.edge_count()) {
    throw std::invalid_argument("ground truth must have one entry per edge");
  }
}

void score(RecoveryReport &report, const Matrix &A, const Vector &y, const std::optional<SparseSignal> &truth,
           double threshold) {
  report.residual = y.size() > 0 ? (A * report.estimate - y).cwiseAbs().maxCoeff() : 0.0;
  if (truth) {
    report.l2_error = (report.estimate - truth->values).norm();
    report.success = *report.l2_error <= threshold;
  }
}

} // namespace

RecoveryReport recover_l1(const DirectedGraph &g, const Vector &y, const std::optional<SparseSignal> &truth,
                          const RecoveryOptions &options) {
  check_lengths(g, y, truth);
  const IncidenceMatrix incidence = incidence_matrix(g);
  const Matrix &A = incidence.matrix();
  const LpSolution sol = solve_basis_pursuit({A, y}, options.lp);
  if (sol.status == lp::Status::infeasible) {
    throw InfeasibleMeasurements("measurements are not in the column space of the incidence matrix");
  }
  RecoveryReport report;
  report.method = RecoveryMethod::full_l1;
  if (sol.status != lp::Status::optimal) {
    report.diagnostic = Diagnostic::solver_failure;
    report.estimate = Vector::Zero(g.edge_count());
  } else {
    report.estimate = sol.x;
    report.unique_optimum = sol.unique;
  }
  score(report, A, y, truth, options.threshold);
  if (options.certify && truth && !truth->support.empty()) {
    report.certificate = certify_support(g, truth->support, options.cycle_cap);
  }
  return report;
}

RecoveryReport algorithm1_recover(const DirectedGraph &g, const Vector &y, const std::optional<SparseSignal> &truth,
                                  const RecoveryOptions &options) {
  check_lengths(g, y, truth);
  const IncidenceMatrix incidence = incidence_matrix(g);
  const Matrix &A = incidence.matrix();
  const double y_inf = y.size() > 0 ? y.cwiseAbs().maxCoeff() : 0.0;
  const double zero_tol = options.zero_tol.value_or(1e-12 * (1.0 + y_inf));

  RecoveryReport report;
  report.method = RecoveryMethod::subgraph_l1;
  report.estimate = Vector::Zero(g.edge_count());

  std::vector<bool> measured(static_cast<std::size_t>(g.vertex_count()));
  for (Index i = 0; i < g.vertex_count(); ++i) measured[static_cast<std::size_t>(i)] = std::abs(y(i)) > zero_tol;
  std::vector<Index> kept;
  for (Index j = 0; j < g.edge_count(); ++j) {
    if (measured[static_cast<std::size_t>(g.edge(j).tail)] && measured[static_cast<std::size_t>(g.edge(j).head)]) {
      kept.push_back(j);
    }
  }
  report.subgraph_edges = SupportSet(kept);
  const bool any_measured = std::find(measured.begin(), measured.end(), true) != measured.end();

  if (kept.empty()) {
    if (any_measured) report.diagnostic = Diagnostic::reduced_system_infeasible;
    score(report, A, y, truth, options.threshold);
    return report;
  }

  const Subgraph sub = edge_subgraph(g, report.subgraph_edges);
  // A measured vertex with no kept edge is a zero row of A_S against y_v != 0.
  std::vector<bool> in_sub(static_cast<std::size_t>(g.vertex_count()), false);
  for (Index v : sub.vertex_to_parent) in_sub[static_cast<std::size_t>(v)] = true;
  for (Index i = 0; i < g.vertex_count(); ++i) {
    if (measured[static_cast<std::size_t>(i)] && !in_sub[static_cast<std::size_t>(i)]) {
      report.diagnostic = Diagnostic::reduced_system_infeasible;
    }
  }

  if (report.diagnostic == Diagnostic::none) {
    Vector y_sub(static_cast<Index>(sub.vertex_to_parent.size()));
    for (std::size_t k = 0; k < sub.vertex_to_parent.size(); ++k) y_sub(static_cast<Index>(k)) = y(sub.vertex_to_parent[k]);
    const LpSolution sol = solve_basis_pursuit({incidence_matrix(sub.graph).matrix(), y_sub}, options.lp);
    if (sol.status == lp::Status::infeasible) {
      report.diagnostic = Diagnostic::reduced_system_infeasible;
    } else if (sol.status != lp::Status::optimal) {
      report.diagnostic = Diagnostic::solver_failure;
    } else {
      for (std::size_t k = 0; k < sub.edge_to_parent.size(); ++k) {
        report.estimate(sub.edge_to_parent[k]) = sol.x(static_cast<Index>(k));
      }
      report.unique_optimum = sol.unique;
    }
  }
  score(report, A, y, truth, options.threshold);

  if (options.certify && truth && !truth->support.empty()) {
    std::vector<Index> local;
    for (Index j : truth->support) {
      auto it = std::lower_bound(kept.begin(), kept.end(), j);
      if (it == kept.end() || *it != j) return report; // support escaped the subgraph
      local.push_back(static_cast<Index>(it - kept.begin()));
    }
    SupportCertificate cert = certify_support(sub.graph, SupportSet(local), options.cycle_cap);
    cert.support = truth->support;
    if (cert.witness) {
      std::vector<Index> verts;
      for (Index v : cert.witness->vertices) verts.push_back(sub.vertex_to_parent[static_cast<std::size_t>(v)]);
      cert.witness = SimpleCycle::from_vertices(g, std::move(verts));
    }
    report.certificate = std::move(cert);
  }
  return report;
}

} // namespace gsr
