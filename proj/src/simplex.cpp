#include "gsr/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsr::lp {

std::string_view to_string(Status s) {
  switch (s) {
  case Status::optimal: return "optimal";
  case Status::infeasible: return "infeasible";
  case Status::unbounded: return "unbounded";
  case Status::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

constexpr double kZeroClamp = 1e-13;
constexpr int kStallLimit = 50; // degenerate Dantzig pivots before switching to Bland

} // namespace

Simplex::Simplex(const Problem &problem, Options options)
    : options_(options), rows_(problem.A.rows()), cols_(problem.A.cols()) {
  if (problem.b.size() != rows_ || problem.c.size() != cols_) {
    throw std::invalid_argument("simplex: dimension mismatch between A, b and c");
  }
  const Index width = cols_ + rows_ + 1;
  tableau_ = Matrix::Zero(rows_, width);
  row_sign_.assign(static_cast<std::size_t>(rows_), 1.0);
  basis_.resize(static_cast<std::size_t>(rows_));
  for (Index i = 0; i < rows_; ++i) {
    const double sign = problem.b(i) < 0 ? -1.0 : 1.0;
    row_sign_[static_cast<std::size_t>(i)] = sign;
    tableau_.row(i).head(cols_) = sign * problem.A.row(i);
    tableau_(i, cols_ + i) = 1.0;
    tableau_(i, width - 1) = sign * problem.b(i);
    basis_[static_cast<std::size_t>(i)] = cols_ + i;
  }
  cost_ = Vector::Zero(cols_ + rows_);
  cost_.head(cols_) = problem.c;
}

void Simplex::price(const Vector &cost) {
  const Index width = cols_ + rows_ + 1;
  reduced_ = Vector::Zero(width);
  reduced_.head(cols_ + rows_) = cost;
  for (Index i = 0; i < rows_; ++i) {
    const double cb = cost(basis_[static_cast<std::size_t>(i)]);
    if (cb != 0.0) reduced_ -= cb * tableau_.row(i).transpose();
  }
}

void Simplex::pivot(Index row, Index col) {
  tableau_.row(row) /= tableau_(row, col);
  for (Index i = 0; i < rows_; ++i) {
    if (i == row) continue;
    const double f = tableau_(i, col);
    if (f != 0.0) tableau_.row(i) -= f * tableau_.row(row);
  }
  const double f = reduced_(col);
  if (f != 0.0) reduced_ -= f * tableau_.row(row).transpose();
  tableau_ = tableau_.unaryExpr([](double v) { return std::abs(v) < kZeroClamp ? 0.0 : v; });
  tableau_(row, col) = 1.0;
  reduced_(col) = 0.0;
  basis_[static_cast<std::size_t>(row)] = col;
  ++iterations_;
}

// Returns true at optimality, false when unbounded or out of iterations
// (stalled_ distinguishes the two).
bool Simplex::iterate(const std::vector<bool> &barred, PivotRule rule) {
  const Index rhs = cols_ + rows_;
  int degenerate_streak = 0;
  while (true) {
    if (iterations_ >= options_.max_iterations) {
      stalled_ = true;
      return false;
    }
    const bool use_bland = rule == PivotRule::bland || degenerate_streak > kStallLimit;
    Index enter = -1;
    double most_negative = -options_.optimality_tol;
    for (Index j = 0; j < rhs; ++j) {
      if (barred[static_cast<std::size_t>(j)]) continue;
      if (reduced_(j) < most_negative) {
        enter = j;
        if (use_bland) break;
        most_negative = reduced_(j);
      }
    }
    if (enter < 0) return true;

    Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < rows_; ++i) {
      const double a = tableau_(i, enter);
      if (a <= options_.pivot_tol) continue;
      const double ratio = tableau_(i, rhs) / a;
      const double eps = 1e-12 * (1.0 + std::abs(best_ratio));
      if (leave < 0 || ratio < best_ratio - eps) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio <= best_ratio + eps &&
                 basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]) {
        best_ratio = std::min(best_ratio, ratio);
        leave = i;
      }
    }
    if (leave < 0) return false;
    degenerate_streak = best_ratio <= 1e-12 ? degenerate_streak + 1 : 0;
    pivot(leave, enter);
  }
}

Vector Simplex::primal() const {
  Vector x = Vector::Zero(cols_);
  const Index rhs = cols_ + rows_;
  for (Index i = 0; i < rows_; ++i) {
    const Index j = basis_[static_cast<std::size_t>(i)];
    if (j < cols_) x(j) = std::max(0.0, tableau_(i, rhs));
  }
  return x;
}

Result Simplex::solve() {
  Result result;
  const Index rhs = cols_ + rows_;
  const double b_scale = 1.0 + (rows_ > 0 ? tableau_.col(rhs).cwiseAbs().maxCoeff() : 0.0);

  // Phase 1: minimise the sum of artificials.
  Vector phase1 = Vector::Zero(cols_ + rows_);
  phase1.tail(rows_).setOnes();
  price(phase1);
  std::vector<bool> barred(static_cast<std::size_t>(rhs), false);
  if (!iterate(barred, options_.rule)) {
    result.status = Status::numerical_failure;
    result.iterations = iterations_;
    return result;
  }
  if (-reduced_(rhs) > options_.feasibility_tol * b_scale) {
    result.status = Status::infeasible;
    result.iterations = iterations_;
    return result;
  }
  for (Index i = 0; i < rows_; ++i) {
    if (basis_[static_cast<std::size_t>(i)] < cols_) continue;
    Index best = -1;
    for (Index j = 0; j < cols_; ++j) {
      if (std::abs(tableau_(i, j)) > options_.pivot_tol &&
          (best < 0 || std::abs(tableau_(i, j)) > std::abs(tableau_(i, best)))) {
        best = j;
      }
    }
    if (best >= 0) pivot(i, best); // otherwise the row is redundant
  }

  // Phase 2.
  for (Index j = cols_; j < rhs; ++j) barred[static_cast<std::size_t>(j)] = true;
  price(cost_);
  if (!iterate(barred, options_.rule)) {
    result.status = stalled_ ? Status::numerical_failure : Status::unbounded;
    result.iterations = iterations_;
    return result;
  }
  optimal_ = true;
  result.status = Status::optimal;
  result.x = primal();
  result.objective = cost_.head(cols_).dot(result.x);
  result.dual.resize(rows_);
  for (Index i = 0; i < rows_; ++i) {
    result.dual(i) = -reduced_(cols_ + i) * row_sign_[static_cast<std::size_t>(i)];
  }
  result.reduced_costs = reduced_.head(cols_);
  result.iterations = iterations_;
  return result;
}

std::optional<Vector> Simplex::alternative_optimum() {
  if (!optimal_) throw std::logic_error("alternative_optimum requires an optimal solve()");
  optimal_ = false;
  const Index rhs = cols_ + rows_;
  const Vector x_star = primal();
  const double z_star = cost_.head(cols_).dot(x_star);
  const double x_scale = 1.0 + x_star.sum();
  const double support_tol = 1e-9 * x_scale;

  // The optimal face: columns with a strictly positive reduced cost stay at zero.
  std::vector<bool> barred(static_cast<std::size_t>(rhs), false);
  Vector probe = Vector::Zero(cols_ + rows_);
  for (Index j = 0; j < rhs; ++j) {
    if (j >= cols_ || reduced_(j) > options_.optimality_tol) {
      barred[static_cast<std::size_t>(j)] = true;
    } else if (x_star(j) <= support_tol) {
      probe(j) = -1.0;
    }
  }
  price(probe);
  if (!iterate(barred, PivotRule::bland)) return std::nullopt;

  const Vector x_alt = primal();
  const double escaped = -probe.head(cols_).dot(x_alt);
  if (escaped <= 1e-9 * x_scale) return std::nullopt;
  if (cost_.head(cols_).dot(x_alt) > z_star + 1e-9 * (1.0 + std::abs(z_star))) return std::nullopt;
  return x_alt;
}

} // namespace gsr::lp
