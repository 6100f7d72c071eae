#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gsr/graph.hpp"

namespace gsr::lp {

enum class PivotRule {
  bland,   // smallest eligible index; never cycles
  dantzig, // most negative reduced cost, falls back to Bland when stalling
};

enum class Status { optimal, infeasible, unbounded, numerical_failure };

std::string_view to_string(Status s);

/// minimize c'x  subject to  A x = b,  x >= 0.
struct Problem {
  Matrix A;
  Vector b;
  Vector c;
};

struct Options {
  PivotRule rule = PivotRule::bland;
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-8; // scaled by 1 + |b|_inf
  double optimality_tol = 1e-9;
  int max_iterations = 100000;
};

struct Result {
  Status status = Status::numerical_failure;
  Vector x;
  double objective = 0.0;
  Vector dual;           // y with A'y <= c at optimality; zero on redundant rows
  Vector reduced_costs;  // c - A'y
  int iterations = 0;
};

/// Dense two-phase tableau simplex. Redundant equality rows are tolerated:
/// their artificial variables stay basic at zero and get a zero dual.
class Simplex {
public:
  explicit Simplex(const Problem &problem, Options options = {});

  Result solve();

  /// After an optimal solve(): searches the optimal face for a solution
  /// whose support leaves the current one. Returns it if the optimum is not
  /// unique, nullopt otherwise. Invalidates further calls.
  std::optional<Vector> alternative_optimum();

private:
  bool iterate(const std::vector<bool> &barred, PivotRule rule);
  void pivot(Index row, Index col);
  void price(const Vector &cost);
  Vector primal() const;

  Options options_;
  Index rows_;
  Index cols_;  // structural columns
  Matrix tableau_; // rows_ x (cols_ + rows_ + 1), last column is the rhs
  Vector reduced_; // cols_ + rows_ + 1 entries; last entry is -objective
  std::vector<Index> basis_;
  std::vector<double> row_sign_;
  Vector cost_;
  int iterations_ = 0;
  bool optimal_ = false;
  bool stalled_ = false;
};

inline Result solve(const Problem &problem, Options options = {}) { return Simplex(problem, options).solve(); }

} // namespace gsr::lp
