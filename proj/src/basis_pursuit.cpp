#include "gsr/basis_pursuit.hpp"

#include <string>

namespace gsr {

bool BasisPursuitProblem::is_consistent() const {
  if (A.rows() != y.size()) return false;
  if (A.cols() == 0) return y.norm() <= 1e-8;
  Vector x = A.completeOrthogonalDecomposition().solve(y);
  return (A * x - y).norm() <= 1e-8 * (1.0 + y.norm());
}

LpSolution solve_basis_pursuit(const BasisPursuitProblem &p, const BasisPursuitOptions &options) {
  const Index m = p.A.rows();
  const Index n = p.A.cols();
  if (p.y.size() != m) throw std::invalid_argument("basis pursuit: y has the wrong length");

  lp::Problem split;
  split.A.resize(m, 2 * n);
  split.A << p.A, -p.A;
  split.b = p.y;
  split.c = Vector::Ones(2 * n);

  lp::Options lp_options;
  lp_options.rule = options.rule;
  lp::Simplex simplex(split, lp_options);
  const lp::Result r = simplex.solve();

  LpSolution out;
  out.status = r.status;
  out.iterations = r.iterations;
  if (r.status != lp::Status::optimal) return out;

  Vector w = r.x;
  if (options.resolve_ties) {
    if (auto other = simplex.alternative_optimum()) {
      out.unique = false;
      w = 0.5 * (w + *other);
    }
  }
  out.x = w.head(n) - w.tail(n);
  out.objective = out.x.lpNorm<1>();
  out.dual = r.dual;
  return out;
}

std::optional<Vector> oracle_l0_min(const BasisPursuitProblem &p, int max_support) {
  const Index n = p.A.cols();
  if (n > 20 || max_support > 5) {
    throw SizeLimitExceeded("oracle_l0_min is limited to n <= 20 and max_support <= 5");
  }
  const double tol = 1e-8 * (1.0 + p.y.norm());
  if (p.y.norm() <= tol) return Vector::Zero(n);

  std::vector<Index> pick;
  for (int k = 1; k <= max_support && k <= n; ++k) {
    pick.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      Matrix sub(p.A.rows(), k);
      for (int i = 0; i < k; ++i) sub.col(i) = p.A.col(pick[static_cast<std::size_t>(i)]);
      Vector coef = sub.completeOrthogonalDecomposition().solve(p.y);
      if ((sub * coef - p.y).norm() <= tol) {
        Vector x = Vector::Zero(n);
        for (int i = 0; i < k; ++i) x(pick[static_cast<std::size_t>(i)]) = coef(i);
        return x;
      }
      // Next k-subset in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

} // namespace gsr
