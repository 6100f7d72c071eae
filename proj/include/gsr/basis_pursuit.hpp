#pragma once

#include <optional>
#include <stdexcept>

#include "gsr/graph.hpp"
#include "gsr/simplex.hpp"

namespace gsr {

class SizeLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// min |x|_1  subject to  A x = y.
struct BasisPursuitProblem {
  Matrix A;
  Vector y;

  /// Least-squares consistency: |A x_ls - y|_2 <= 1e-8 (1 + |y|_2).
  bool is_consistent() const;
};

struct LpSolution {
  Vector x;
  double objective = 0.0;
  lp::Status status = lp::Status::numerical_failure;
  int iterations = 0;
  /// Dual vector lambda with |A' lambda|_inf <= 1 and lambda'y = |x|_1.
  Vector dual;
  /// False when the optimal face has more than one point; x is then the
  /// midpoint of two distinct optima rather than a vertex.
  bool unique = true;
};

struct BasisPursuitOptions {
  lp::PivotRule rule = lp::PivotRule::bland;
  /// Probe the optimal face and, if it is not a single point, return an
  /// optimum off the vertex set (as an interior-point solver would).
  bool resolve_ties = true;
};

/// Solves basis pursuit through the split LP
///   min 1'(u + v)  s.t.  A (u - v) = y,  u, v >= 0.
LpSolution solve_basis_pursuit(const BasisPursuitProblem &p, const BasisPursuitOptions &options = {});

/// Brute-force sparsest solution: tries every support of size 0..max_support
/// in lexicographic order. Desk scale only (n <= 20, max_support <= 5).
std::optional<Vector> oracle_l0_min(const BasisPursuitProblem &p, int max_support);

} // namespace gsr
