#include "swing/exact/linear_solve.hpp"

#include <stdexcept>

namespace swing {

namespace {

struct Echelon {
  RationalMatrix rows;  // augmented, reduced
  std::vector<std::size_t> pivot_columns;
};

Echelon reduce(RationalMatrix rows, std::size_t columns) {
  Echelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < columns && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[found], rows[pivot_row]);
    const Rational inv = Rational(1) / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < rows[r].size(); ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace

LinearSolution solve_linear(const RationalMatrix& matrix, const RationalVector& rhs) {
  if (matrix.size() != rhs.size()) throw std::invalid_argument("solve_linear: row count differs from rhs length");
  const std::size_t columns = matrix.empty() ? 0 : matrix.front().size();
  RationalMatrix augmented;
  augmented.reserve(matrix.size());
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    if (matrix[r].size() != columns) throw std::invalid_argument("solve_linear: ragged matrix");
    auto row = matrix[r];
    row.push_back(rhs[r]);
    augmented.push_back(std::move(row));
  }
  const Echelon ech = reduce(std::move(augmented), columns);
  LinearSolution out;
  out.rank = static_cast<int>(ech.pivot_columns.size());
  for (std::size_t r = ech.pivot_columns.size(); r < ech.rows.size(); ++r)
    if (ech.rows[r][columns] != 0) return out;
  RationalVector x(columns, Rational(0));
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) x[ech.pivot_columns[i]] = ech.rows[i][columns];
  out.solution = std::move(x);
  out.dimension = static_cast<int>(columns) - out.rank;
  return out;
}

std::vector<RationalVector> null_space(const RationalMatrix& matrix, std::size_t columns) {
  const Echelon ech = reduce(matrix, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) v[ech.pivot_columns[i]] = -ech.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace swing
