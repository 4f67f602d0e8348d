#pragma once

#include <optional>
#include <vector>

#include "swing/exact/rational.hpp"

namespace swing {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

struct LinearSolution {
  // One solution (free variables set to zero); absent when inconsistent.
  std::optional<RationalVector> solution;
  // Dimension of the solution space (nullity of the matrix); meaningful only
  // when a solution exists.
  int dimension = 0;
  int rank = 0;
};

// Exact Gauss-Jordan elimination. `matrix` is rows x columns; rows may be
// empty when columns == 0 is implied by `rhs`. Throws std::invalid_argument on
// ragged input.
LinearSolution solve_linear(const RationalMatrix& matrix, const RationalVector& rhs);

// Basis of the kernel, one vector per free column.
std::vector<RationalVector> null_space(const RationalMatrix& matrix, std::size_t columns);

}  // namespace swing
