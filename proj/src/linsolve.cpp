#include "ncalg/linsolve.hpp"

#include <algorithm>

namespace ncalg {

namespace {

struct Echelon {
  ScalarMatrix m;  // augmented when solving
  std::vector<std::size_t> pivot_cols;
  std::vector<ParamPoly> conditions;
};

// Bareiss elimination restricted to the first `ncols` columns. Each update
// divides exactly by the previous pivot, which keeps entries polynomial in
// the input entries when the input is polynomial.
Echelon eliminate(ScalarMatrix m, std::size_t ncols) {
  Echelon e;
  std::size_t rows = m.size();
  Scalar prev(1L);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Scalar p = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] = (p * m[i][k] - f * m[r][k]) / prev;
    }
    if (!p.is_rational()) e.conditions.push_back(p.numerator().monic());
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

LinearSolution solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  ScalarMatrix aug(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  Echelon e = eliminate(std::move(aug), cols);
  LinearSolution sol;
  sol.rank = e.pivot_cols.size();
  sol.pivot_conditions = e.conditions;
  for (std::size_t i = sol.rank; i < rows; ++i) {
    if (!e.m[i][cols].is_zero()) {
      sol.bad_row = i;
      return sol;
    }
  }
  sol.consistent = true;
  sol.x.assign(cols, Scalar());
  for (std::size_t k = sol.rank; k-- > 0;) {
    std::size_t c = e.pivot_cols[k];
    Scalar rhs = e.m[k][cols];
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!e.m[k][j].is_zero() && !sol.x[j].is_zero()) rhs -= e.m[k][j] * sol.x[j];
    sol.x[c] = rhs / e.m[k][c];
  }
  return sol;
}

std::size_t matrix_rank(const ScalarMatrix& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  return eliminate(a, cols).pivot_cols.size();
}

}  // namespace ncalg
