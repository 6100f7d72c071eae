#include "doctest.h"
#include "fixtures.hpp"

#include <random>

#include "gsr/recover.hpp"

using namespace gsr;
using gsr::testing::example_graph;
using gsr::testing::example_incidence;

namespace {

// Gaussian values on a fixed support, drawn independently of the library's generators.
SparseSignal gaussian_on(const SupportSet &S, Index n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  Vector x = Vector::Zero(n);
  for (Index j : S) {
    do x(j) = gauss(rng);
    while (x(j) == 0.0);
  }
  return SparseSignal::from_values(std::move(x));
}

} // namespace

TEST_SUITE_BEGIN("recover");

TEST_CASE("SparseSignal::from_values") {
  const SparseSignal s = SparseSignal::from_values((Vector(4) << 0, 2, 0, -1).finished());
  CHECK(s.support.ids() == std::vector<Index>{1, 3});
}

TEST_CASE("1-sparse signals are recovered by both methods") {
  const DirectedGraph g = example_graph();
  const Matrix A = example_incidence();
  for (Index j = 0; j < g.edge_count(); ++j) {
    Vector x = Vector::Zero(g.edge_count());
    x(j) = 1.5;
    const SparseSignal truth = SparseSignal::from_values(x);
    const RecoveryReport full = recover_l1(g, A * x, truth);
    const RecoveryReport sub = algorithm1_recover(g, A * x, truth);
    CAPTURE(j);
    CHECK(full.success);
    CHECK(sub.success);
    CHECK(full.method == RecoveryMethod::full_l1);
    CHECK(sub.method == RecoveryMethod::subgraph_l1);
    CHECK(sub.subgraph_edges.ids() == std::vector<Index>{j});
  }
}

TEST_CASE("zero measurements") {
  const DirectedGraph g = example_graph();
  const SparseSignal zero = SparseSignal::from_values(Vector::Zero(10));
  const RecoveryReport full = recover_l1(g, Vector::Zero(9), zero);
  const RecoveryReport sub = algorithm1_recover(g, Vector::Zero(9), zero);
  CHECK(full.success);
  CHECK(sub.success);
  CHECK(sub.subgraph_edges.empty());
  CHECK(sub.diagnostic == Diagnostic::none);
}

TEST_CASE("errors") {
  const DirectedGraph g = example_graph();
  CHECK_THROWS_AS(recover_l1(g, Vector::Ones(9)), InfeasibleMeasurements);
  CHECK_THROWS_AS(recover_l1(g, Vector::Zero(8)), std::invalid_argument);
  CHECK_THROWS_AS(algorithm1_recover(g, Vector::Zero(9), SparseSignal::from_values(Vector::Zero(3))),
                  std::invalid_argument);
}

TEST_CASE("a support covering most of a cycle defeats l1") {
  // {1,2,3} covers three of the four edges of the 4-cycle: the closing edge is
  // a cheaper explanation whatever the values. Its endpoints are measured too,
  // so the subgraph keeps the cycle and does no better.
  const DirectedGraph g = example_graph();
  const Matrix A = example_incidence();
  const SupportSet S = gsr::testing::one_based({1, 2, 3});
  std::mt19937_64 rng(101);
  int l1_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const SparseSignal truth = gaussian_on(S, 10, rng);
    const Vector y = A * truth.values;
    const RecoveryReport full = recover_l1(g, y, truth, {.certify = true});
    l1_failures += !full.success;
    REQUIRE(full.certificate.has_value());
    CHECK_FALSE(full.certificate->holds);
    CHECK(full.certificate->worst_ratio == 0.75);
    const RecoveryReport sub = algorithm1_recover(g, y, truth, {.certify = true});
    CHECK(sub.subgraph_edges == gsr::testing::one_based({1, 2, 3, 4}));
    REQUIRE(sub.certificate.has_value());
    CHECK_FALSE(sub.certificate->holds);
  }
  CHECK(l1_failures >= 99);
}

TEST_CASE("the subgraph method on a support that l1 cannot certify") {
  const DirectedGraph g = example_graph();
  const Matrix A = example_incidence();
  const SupportSet S = gsr::testing::one_based({3, 4, 5, 6, 7, 8, 10});
  const SupportCertificate on_full = certify_support(g, S);
  CHECK_FALSE(on_full.holds);
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const SparseSignal truth = gaussian_on(S, 10, rng);
    const RecoveryReport sub = algorithm1_recover(g, A * truth.values, truth, {.certify = true});
    CHECK(sub.success);
    CHECK(sub.diagnostic == Diagnostic::none);
    CHECK(sub.residual <= 1e-9);
    CHECK(sub.subgraph_edges == S); // the measured subgraph is a tree
    REQUIRE(sub.certificate.has_value());
    CHECK(sub.certificate->holds);
    CHECK(sub.certificate->support == S);
  }
}

TEST_CASE("cancelling measurements are diagnosed") {
  // Equal flow through 6 -> 7 and out of 7 on edge 8 (8 -> 7 reversed) leaves vertex 7 silent.
  const DirectedGraph g = example_graph();
  Vector x = Vector::Zero(10);
  x(6) = 1.0;  // edge 7: 6 -> 7
  x(7) = -1.0; // edge 8: 8 -> 7, carried backwards
  const Vector y = example_incidence() * x;
  REQUIRE(y(6) == 0.0);
  const RecoveryReport sub = algorithm1_recover(g, y, SparseSignal::from_values(x));
  CHECK(sub.diagnostic == Diagnostic::reduced_system_infeasible);
  CHECK_FALSE(sub.success);
  CHECK(to_string(sub.diagnostic) == "reduced_system_infeasible");
}

TEST_CASE("the subgraph estimate is embedded on the right edges") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const DirectedGraph g = gsr::testing::random_connected_graph(10, 16, rng);
    const Matrix A = incidence_matrix(g).matrix();
    std::vector<Index> ids;
    std::uniform_int_distribution<Index> pick(0, g.edge_count() - 1);
    for (int k = 0; k < 3; ++k) ids.push_back(pick(rng));
    const SparseSignal truth = gaussian_on(SupportSet(ids), g.edge_count(), rng);
    const Vector y = A * truth.values;
    const RecoveryReport sub = algorithm1_recover(g, y, truth, {.certify = true});
    const RecoveryReport full = recover_l1(g, y, truth);
    for (Index j = 0; j < g.edge_count(); ++j) {
      if (!sub.subgraph_edges.contains(j)) CHECK(sub.estimate(j) == 0.0);
    }
    for (Index j : truth.support) CHECK(sub.subgraph_edges.contains(j));
    CAPTURE(trial);
    CHECK(sub.diagnostic == Diagnostic::none);
    CHECK(sub.residual <= 1e-9);
    CHECK(full.residual <= 1e-9);
    // Exact recovery exactly when the truth's support passes on the measured subgraph.
    REQUIRE(sub.certificate.has_value());
    if (sub.certificate->holds) CHECK(sub.success);
  }
}

TEST_CASE("certified supports are always recovered by l1") {
  std::mt19937_64 rng(109);
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const DirectedGraph g = gsr::testing::random_connected_graph(9, 13, rng);
    const Matrix A = incidence_matrix(g).matrix();
    std::uniform_int_distribution<Index> pick(0, g.edge_count() - 1);
    const SupportSet S({pick(rng), pick(rng)});
    const SparseSignal truth = gaussian_on(S, g.edge_count(), rng);
    const RecoveryReport full = recover_l1(g, A * truth.values, truth, {.certify = true});
    REQUIRE(full.certificate.has_value());
    if (!full.certificate->holds) continue;
    ++certified;
    CHECK(full.success);
    CHECK(full.unique_optimum);
  }
  CHECK(certified >= 20);
}

TEST_SUITE_END();
