#pragma once

#include <vector>

#include "gsr/basis_pursuit.hpp"
#include "gsr/graph.hpp"
#include "gsr/parallel.hpp"

namespace gsr {

/// Brute-force nullspace constant of an arbitrary matrix:
///   max_{|S| <= s} max_{A eta = 0, |eta|_1 <= 1} |eta_S|_1,
/// one LP per (S, sign pattern). Never consults graph structure.
/// Limited to n <= 25 and s <= 6.
double oracle_nullspace_constant(const Matrix &A, Index s, Exec exec = Exec::parallel);

struct ExtremePointSet {
  std::vector<Vector> vertices; // nonzero vertices of nullsp(A) n B_1, both signs
  Index max_support = 0;
};

/// Enumerates the vertices of nullsp(A) n B_1 by support: eta is a vertex
/// iff |eta|_1 = 1 and nullsp(A_T) is the line through eta_T, where T is the
/// support of eta. Rank decisions use a relative pivot threshold of 1e-9.
/// Limited to n <= 20.
ExtremePointSet oracle_extreme_point_sparsity(const Matrix &A, Exec exec = Exec::parallel);

} // namespace gsr
