#include "gsr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gsr/simplex.hpp"

namespace gsr {

namespace {

std::vector<std::vector<Index>> combinations(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> pick(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(pick);
    Index i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Variables [p (n), q (n), slack]; eta = p - q, |eta|_1 <= 1 via the last row.
lp::Problem ball_problem(const Matrix &A) {
  const Index m = A.rows();
  const Index n = A.cols();
  lp::Problem prob;
  prob.A = Matrix::Zero(m + 1, 2 * n + 1);
  prob.A.topLeftCorner(m, n) = A;
  prob.A.block(0, n, m, n) = -A;
  prob.A.row(m).setOnes();
  prob.b = Vector::Zero(m + 1);
  prob.b(m) = 1.0;
  prob.c = Vector::Zero(2 * n + 1);
  return prob;
}

double max_signed_mass(lp::Problem prob, const std::vector<Index> &subset, std::uint32_t signs, Index n) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const double sigma = (signs >> i) & 1u ? -1.0 : 1.0;
    prob.c(subset[i]) = -sigma;
    prob.c(n + subset[i]) = sigma;
  }
  const lp::Result r = lp::solve(prob);
  if (r.status != lp::Status::optimal) throw std::runtime_error("oracle LP failed: " + std::string(lp::to_string(r.status)));
  return -r.objective;
}

} // namespace

double oracle_nullspace_constant(const Matrix &A, Index s, Exec exec) {
  const Index n = A.cols();
  if (n > 25 || s > 6) throw SizeLimitExceeded("oracle_nullspace_constant is limited to n <= 25 and s <= 6");
  if (s <= 0 || n == 0) return 0.0;
  // Adding indices never lowers |eta_S|_1, so subsets of size min(s, n) suffice.
  const auto subsets = combinations(n, std::min(s, n));
  const lp::Problem base = ball_problem(A);
  const Index k = std::min(s, n);
  // The first sign is fixed: (S, sigma) and (S, -sigma) have the same value.
  const auto patterns = static_cast<Index>(std::uint32_t{1} << (k - 1));
  const Index jobs = static_cast<Index>(subsets.size()) * patterns;

  double best = 0.0;
  if (exec == Exec::serial) {
    for (Index job = 0; job < jobs; ++job) {
      const auto &subset = subsets[static_cast<std::size_t>(job / patterns)];
      best = std::max(best, max_signed_mass(base, subset, static_cast<std::uint32_t>(job % patterns) << 1, n));
    }
    return best;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (Index job = 0; job < jobs; ++job) {
    const auto &subset = subsets[static_cast<std::size_t>(job / patterns)];
    best = std::max(best, max_signed_mass(base, subset, static_cast<std::uint32_t>(job % patterns) << 1, n));
  }
  return best;
}

namespace {

// Vertex with support exactly `mask`, normalised so its first entry is positive.
std::optional<Vector> vertex_on_support(const Matrix &A, std::uint32_t mask) {
  const Index n = A.cols();
  std::vector<Index> cols;
  for (Index j = 0; j < n; ++j)
    if (mask >> j & 1u) cols.push_back(j);
  Matrix sub(A.rows(), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) sub.col(static_cast<Index>(i)) = A.col(cols[i]);
  Eigen::FullPivLU<Matrix> lu(sub);
  lu.setThreshold(1e-9);
  if (lu.dimensionOfKernel() != 1) return std::nullopt;
  Vector k = lu.kernel().col(0);
  const double scale = k.cwiseAbs().maxCoeff();
  if ((k.cwiseAbs().array() <= 1e-9 * scale).any()) return std::nullopt;
  k /= k.lpNorm<1>();
  if (k(0) < 0) k = -k;
  Vector eta = Vector::Zero(n);
  for (std::size_t i = 0; i < cols.size(); ++i) eta(cols[i]) = k(static_cast<Index>(i));
  return eta;
}

} // namespace

ExtremePointSet oracle_extreme_point_sparsity(const Matrix &A, Exec exec) {
  const Index n = A.cols();
  if (n > 20) throw SizeLimitExceeded("oracle_extreme_point_sparsity is limited to n <= 20");
  const auto total = static_cast<std::int64_t>(1) << n;
  std::vector<std::pair<std::uint32_t, Vector>> found;

  if (exec == Exec::serial) {
    for (std::int64_t mask = 1; mask < total; ++mask) {
      if (auto v = vertex_on_support(A, static_cast<std::uint32_t>(mask))) found.emplace_back(mask, *v);
    }
  } else {
#pragma omp parallel
    {
      std::vector<std::pair<std::uint32_t, Vector>> local;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::int64_t mask = 1; mask < total; ++mask) {
        if (auto v = vertex_on_support(A, static_cast<std::uint32_t>(mask))) local.emplace_back(mask, *v);
      }
#pragma omp critical(gsr_extreme_merge)
      found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  }

  ExtremePointSet out;
  for (auto &[mask, v] : found) {
    out.max_support = std::max<Index>(out.max_support, std::popcount(mask));
    out.vertices.push_back(v);
    out.vertices.push_back(-v);
  }
  return out;
}

} // namespace gsr
