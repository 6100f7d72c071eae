#include "doctest.h"

#include <bit>
#include <random>

#include "gsr/simplex.hpp"

using namespace gsr;
using namespace gsr::lp;

namespace {

// Test oracle: enumerates every basis of a small standard-form LP and keeps
// the cheapest feasible basic solution. Returns nullopt when none is feasible.
std::optional<double> vertex_enumeration_minimum(const Problem &p) {
  const Index m = p.A.rows();
  const Index n = p.A.cols();
  Eigen::FullPivLU<Matrix> full(p.A);
  const Index r = full.rank();
  std::optional<double> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<int>(r)) continue;
    std::vector<Index> cols;
    for (Index j = 0; j < n; ++j)
      if (mask >> j & 1u) cols.push_back(j);
    Matrix B(m, r);
    for (Index k = 0; k < r; ++k) B.col(k) = p.A.col(cols[static_cast<std::size_t>(k)]);
    Eigen::FullPivLU<Matrix> lu(B);
    if (lu.rank() < r) continue;
    const Vector xb = B.colPivHouseholderQr().solve(p.b);
    if ((B * xb - p.b).norm() > 1e-9 || xb.minCoeff() < -1e-9) continue;
    double obj = 0.0;
    for (Index k = 0; k < r; ++k) obj += p.c(cols[static_cast<std::size_t>(k)]) * xb(k);
    if (!best || obj < *best) best = obj;
  }
  return best;
}

void check_kkt(const Problem &p, const Result &res) {
  REQUIRE(res.status == Status::optimal);
  CHECK((p.A * res.x - p.b).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK(res.x.minCoeff() >= -1e-12);
  CHECK((p.A.transpose() * res.dual - p.c).maxCoeff() <= 1e-8);
  CHECK(p.b.dot(res.dual) == doctest::Approx(res.objective).epsilon(1e-9));
  CHECK(p.c.dot(res.x) == doctest::Approx(res.objective).epsilon(1e-9));
}

} // namespace

TEST_SUITE_BEGIN("simplex");

TEST_CASE("a textbook problem") {
  // min -x1 - 2 x2  s.t.  x1 + x2 + s1 = 4,  x1 + 3 x2 + s2 = 6.
  Problem p;
  p.A = (Matrix(2, 4) << 1, 1, 1, 0, 1, 3, 0, 1).finished();
  p.b = (Vector(2) << 4, 6).finished();
  p.c = (Vector(4) << -1, -2, 0, 0).finished();
  for (PivotRule rule : {PivotRule::bland, PivotRule::dantzig}) {
    const Result res = solve(p, {.rule = rule});
    check_kkt(p, res);
    CHECK(res.objective == doctest::Approx(-5.0));
    CHECK(res.x(0) == doctest::Approx(3.0));
    CHECK(res.x(1) == doctest::Approx(1.0));
  }
}

TEST_CASE("infeasible and unbounded problems") {
  Problem infeasible;
  infeasible.A = (Matrix(2, 2) << 1, 1, 1, 1).finished();
  infeasible.b = (Vector(2) << 1, 2).finished();
  infeasible.c = Vector::Ones(2);
  CHECK(solve(infeasible).status == Status::infeasible);

  Problem negative;
  negative.A = (Matrix(1, 2) << 1, 1).finished();
  negative.b = (Vector(1) << -1).finished();
  negative.c = Vector::Ones(2);
  CHECK(solve(negative).status == Status::infeasible);

  Problem unbounded;
  unbounded.A = (Matrix(1, 2) << 1, -1).finished();
  unbounded.b = (Vector(1) << 1).finished();
  unbounded.c = (Vector(2) << 0, -1).finished();
  CHECK(solve(unbounded).status == Status::unbounded);
  CHECK(solve(unbounded, {.rule = PivotRule::dantzig}).status == Status::unbounded);
}

TEST_CASE("redundant rows and empty problems") {
  Problem p;
  p.A = (Matrix(3, 3) << 1, 1, 0, 0, 1, 1, 1, 2, 1).finished(); // row 3 = row 1 + row 2
  p.b = (Vector(3) << 1, 1, 2).finished();
  p.c = (Vector(3) << 1, 2, 1).finished();
  const Result res = solve(p);
  check_kkt(p, res);
  CHECK(res.objective == doctest::Approx(2.0));

  Problem zero_rows;
  zero_rows.A = Matrix::Zero(0, 2);
  zero_rows.b = Vector::Zero(0);
  zero_rows.c = (Vector(2) << 1, 0).finished();
  const Result z = solve(zero_rows);
  CHECK(z.status == Status::optimal);
  CHECK(z.objective == 0.0);

  CHECK_THROWS_AS(Simplex(Problem{Matrix::Zero(2, 2), Vector::Zero(3), Vector::Zero(2)}), std::invalid_argument);
}

TEST_CASE("alternative optima") {
  // min x1 + x2  s.t.  x1 + x2 = 1: the whole segment is optimal.
  Problem flat;
  flat.A = (Matrix(1, 2) << 1, 1).finished();
  flat.b = (Vector(1) << 1).finished();
  flat.c = Vector::Ones(2);
  Simplex s(flat);
  const Result res = s.solve();
  REQUIRE(res.status == Status::optimal);
  const auto alt = s.alternative_optimum();
  REQUIRE(alt.has_value());
  CHECK((*alt - res.x).norm() > 0.5);
  CHECK(alt->sum() == doctest::Approx(1.0));

  Problem sharp = flat;
  sharp.c = (Vector(2) << 1, 2).finished();
  Simplex t(sharp);
  REQUIRE(t.solve().status == Status::optimal);
  CHECK_FALSE(t.alternative_optimum().has_value());
  CHECK_THROWS_AS(t.alternative_optimum(), std::logic_error);
}

TEST_CASE("random problems match vertex enumeration") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.1, 2.0);
  int feasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Index m = 1 + trial % 4;
    const Index n = m + 2 + trial % 5;
    Problem p;
    p.A = Matrix::NullaryExpr(m, n, [&] { return gauss(rng); });
    if (trial % 3 == 0) {
      // b from a nonnegative point so the problem is feasible
      p.b = p.A * Vector::NullaryExpr(n, [&] { return unit(rng); });
    } else {
      p.b = Vector::NullaryExpr(m, [&] { return gauss(rng); });
    }
    p.c = Vector::NullaryExpr(n, [&] { return unit(rng); }); // positive costs: bounded
    CAPTURE(trial);
    const auto expected = vertex_enumeration_minimum(p);
    for (PivotRule rule : {PivotRule::bland, PivotRule::dantzig}) {
      const Result res = solve(p, {.rule = rule});
      if (!expected) {
        CHECK(res.status == Status::infeasible);
        continue;
      }
      check_kkt(p, res);
      CHECK(res.objective == doctest::Approx(*expected).epsilon(1e-7));
    }
    feasible += expected.has_value();
  }
  CHECK(feasible >= 50);
}

TEST_CASE("degenerate problems terminate") {
  // Many ties in the ratio test: b = 0 makes every pivot degenerate.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Problem p;
    p.A = Matrix::NullaryExpr(4, 9, [&] { return static_cast<double>(small(rng)); });
    p.b = p.A * (Vector(9) << 1, 0, 0, 1, 0, 0, 0, 0, 0).finished();
    p.c = Vector::NullaryExpr(9, [&] { return static_cast<double>(small(rng)); });
    const auto expected = vertex_enumeration_minimum(p);
    for (PivotRule rule : {PivotRule::bland, PivotRule::dantzig}) {
      const Result res = solve(p, {.rule = rule});
      CHECK(res.status != Status::numerical_failure);
      if (res.status == Status::optimal) {
        REQUIRE(expected.has_value());
        CHECK(res.objective == doctest::Approx(*expected).epsilon(1e-9));
      }
    }
  }
}

TEST_SUITE_END();
