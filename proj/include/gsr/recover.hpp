#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "gsr/basis_pursuit.hpp"
#include "gsr/certify.hpp"
#include "gsr/graph.hpp"

namespace gsr {

/// Measurements outside the column space of the incidence matrix.
class InfeasibleMeasurements : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Recovery is declared exact when |estimate - truth|_2 <= this.
inline constexpr double kRecoveryThreshold = 1e-5;

struct SparseSignal {
  Vector values;
  SupportSet support; // exactly the nonzero positions of values

  static SparseSignal from_values(Vector values);
};

enum class RecoveryMethod { full_l1, subgraph_l1 };
std::string_view to_string(RecoveryMethod m);

enum class Diagnostic {
  none,
  reduced_system_infeasible, // a measurement cancelled and the subgraph cannot explain y
  solver_failure,
};
std::string_view to_string(Diagnostic d);

struct RecoveryReport {
  Vector estimate;
  RecoveryMethod method = RecoveryMethod::full_l1;
  bool success = false;              // only meaningful when l2_error is set
  std::optional<double> l2_error;    // set when a ground truth was supplied
  double residual = 0.0;             // |A estimate - y|_inf
  bool unique_optimum = true;
  SupportSet subgraph_edges;         // edges kept by the subgraph method
  std::optional<SupportCertificate> certificate;
  Diagnostic diagnostic = Diagnostic::none;
};

struct RecoveryOptions {
  double threshold = kRecoveryThreshold;
  /// Threshold below which a vertex measurement counts as zero; defaults to
  /// 1e-12 (1 + |y|_inf).
  std::optional<double> zero_tol;
  /// Attach a support certificate for the truth's support (needs a truth).
  bool certify = false;
  std::size_t cycle_cap = kDefaultCycleCap;
  BasisPursuitOptions lp;
};

/// Basis pursuit on the full incidence matrix. Throws InfeasibleMeasurements.
RecoveryReport recover_l1(const DirectedGraph &g, const Vector &y, const std::optional<SparseSignal> &truth = {},
                          const RecoveryOptions &options = {});

/// Subgraph recovery from sparse vertex measurements: keep the edges whose
/// endpoints both carry a nonzero measurement, solve basis pursuit on that
/// subgraph, and embed the result. Infeasibility of the reduced system is
/// reported through `diagnostic` rather than thrown.
RecoveryReport algorithm1_recover(const DirectedGraph &g, const Vector &y,
                                  const std::optional<SparseSignal> &truth = {},
                                  const RecoveryOptions &options = {});

} // namespace gsr
