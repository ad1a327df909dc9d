#pragma once

#include <optional>
#include <vector>

#include "ncalg/scalar.hpp"

namespace ncalg {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct LinearSolution {
  bool consistent = false;
  /// A particular solution (free variables set to zero) when consistent.
  std::vector<Scalar> x;
  std::size_t rank = 0;
  /// Index of an equation left unsatisfiable, when inconsistent.
  std::optional<std::size_t> bad_row;
  /// Numerators of symbolic pivots; the solution is valid where they are nonzero.
  std::vector<ParamPoly> pivot_conditions;
};

/// Solves A x = b by fraction-free (Bareiss) elimination over the Scalar field.
LinearSolution solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b);

/// Rank by the same elimination.
std::size_t matrix_rank(const ScalarMatrix& a);

}  // namespace ncalg
