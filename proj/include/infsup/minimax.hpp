// Copyright 2026 The infsup authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "infsup/lp.hpp"
#include "infsup/matrix.hpp"

namespace infsup {

/// Solution of the column-mixture game on a matrix A:
///   v_mixed = min over mu in the column simplex of max over rows of (A mu),
/// together with the dual row functional phi certifying the value from the
/// other side: min over columns of (phi^T A) = v_mixed.
template <class T>
struct MinimaxReport {
  T v_pure{};
  std::size_t pure_col = 0;  // argmin column, lowest index on ties
  T v_mixed{};
  SimplexVector<T> mu;       // optimal column mixture
  SimplexVector<T> phi;      // optimal row functional
  bool equal = false;        // v_mixed >= v_pure - tol
};

/// min over columns of max over rows, scanning left to right.
template <class T>
T pure_minimax_value(const Matrix<T>& a, std::size_t* argmin_col = nullptr) {
  if (a.empty()) throw Error::invalid("empty matrix");
  T best = a.column_max(0);
  std::size_t best_col = 0;
  for (std::size_t j = 1; j < a.cols(); ++j) {
    const T v = a.column_max(j);
    if (v < best) {
      best = v;
      best_col = j;
    }
  }
  if (argmin_col) *argmin_col = best_col;
  return best;
}

/// LP formulation: minimize v subject to (A mu)_i <= v for each row i,
/// sum(mu) = 1, mu >= 0, v free. The row duals are phi.
template <class T>
MinimaxReport<T> minimax(const Matrix<T>& a, const T& tol) {
  if (a.empty()) throw Error::invalid("empty matrix");
  const std::size_t m = a.rows(), n = a.cols();

  LpProblem<T> lp;
  lp.objective.assign(n + 1, T(0));
  lp.objective[n] = T(1);
  lp.is_free.assign(n + 1, false);
  lp.is_free[n] = true;
  lp.lhs = Matrix<T>(m + 1, n + 1, T(0));
  lp.rel.assign(m + 1, Rel::Le);
  lp.rhs.assign(m + 1, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.lhs.at(i, j) = a.at(i, j);
    lp.lhs.at(i, n) = T(-1);
  }
  for (std::size_t j = 0; j < n; ++j) lp.lhs.at(m, j) = T(1);
  lp.rel[m] = Rel::Eq;
  lp.rhs[m] = T(1);

  LpOutcome<T> out = solve(lp, tol);
  if (out.status != LpStatus::Optimal) {
    // The game LP is feasible and bounded for every finite matrix.
    throw Error::numerical("matrix game LP did not reach an optimum");
  }

  MinimaxReport<T> report;
  report.v_mixed = out.value;
  report.mu = SimplexVector<T>::checked(
      std::vector<T>(out.primal.begin(), out.primal.begin() + n));
  std::vector<T> phi(m);
  for (std::size_t i = 0; i < m; ++i) phi[i] = T(-out.dual[i]);
  report.phi = SimplexVector<T>::checked(std::move(phi));
  report.v_pure = pure_minimax_value(a, &report.pure_col);
  report.equal = !(report.v_mixed < report.v_pure - tol);

  // Both certificate directions are recomputed before the report leaves the
  // solver; tolerances only matter in float mode.
  const std::vector<T> row_values = a.times_column_mixture(report.mu.weights);
  T primal_side = row_values[0];
  for (const T& v : row_values) {
    if (v > primal_side) primal_side = v;
  }
  const std::vector<T> col_values = a.row_mixture_times(report.phi.weights);
  T dual_side = col_values[0];
  for (const T& v : col_values) {
    if (v < dual_side) dual_side = v;
  }
  const T slack = tol + tol;
  if (abs_value<T>(primal_side - report.v_mixed) > slack ||
      abs_value<T>(dual_side - report.v_mixed) > slack) {
    throw Error::numerical("matrix game certificates failed recheck");
  }
  return report;
}

}  // namespace infsup
