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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infsup/matrix.hpp"
#include "infsup/scalar.hpp"

namespace infsup {

/// A sample-discretized program
///
///   minimize f(x) over the sampled points x subject to g_l(x) <= 0 for
///   every constraint row l,
///
/// given by the objective values f(x_j), the constraint table
/// constraints[l][j] = g_l(x_j), and an optional candidate optimum x0.
/// Entries are stored as exact rationals regardless of mode (decimal
/// literals parse exactly); scalar_mode decides the arithmetic every
/// operation runs in. Instances are immutable after construction and safe
/// to share between threads.
struct ProgramInstance {
  std::vector<std::string> lambda_labels;  // length L, one per constraint row
  std::vector<std::string> x_labels;       // length n, one per sampled point
  std::vector<Rational> objective;         // length n
  Matrix<Rational> constraints;            // L x n
  std::optional<std::size_t> x0_index;
  ScalarMode scalar_mode = ScalarMode::Float64;

  std::size_t num_rows() const { return constraints.rows(); }
  std::size_t num_points() const { return objective.size(); }

  /// Checks the structural invariants (dimensions, label counts, x0 range).
  void validate() const;
};

/// Parses the instance JSON document:
///   {"lambda_labels": [string]?, "x_labels": [string]?,
///    "objective": [number], "constraints": [[number]], "x0_index": int?}
/// Numbers may be JSON numbers or strings like "2/3"; decimal literals are
/// read exactly (0.1 -> 1/10) in either mode. Missing labels default to
/// g1.. / x1... Errors carry the offending field path.
ProgramInstance parse_instance(std::string_view json_text, ScalarMode mode);

/// Inverse of parse_instance up to the instance's own scalar semantics:
/// float64 emits JSON numbers, exact-rational emits exact literals.
std::string serialize_instance(const ProgramInstance& inst);

/// Comparison at mode semantics: exact in rational mode, on converted
/// doubles in float mode.
bool instances_equal(const ProgramInstance& a, const ProgramInstance& b);

/// Bare matrix input, one comma-separated row per line.
Matrix<Rational> parse_csv_matrix(std::string_view text);

/// Comma-separated list of numbers, e.g. a grid or a weight vector.
std::vector<Rational> parse_number_list(std::string_view text);

/// Cubic counterexample family truncated at n_trunc rows on the given grid:
/// objective f(x) = x, constraint rows g_n(x) = -x^3 / n for n = 1..n_trunc,
/// x0 at the grid point 0 (which must be present).
ProgramInstance generate_cubic_counterexample(std::size_t n_trunc,
                                       const std::vector<Rational>& grid,
                                       ScalarMode mode);

/// Textbook convex program: minimize x^2 subject to x + 1 <= 0 on the grid,
/// x0 at the grid point -1 (which must be present).
ProgramInstance generate_convex_demo(const std::vector<Rational>& grid,
                                     ScalarMode mode);

/// Builds a named instance; names: "paper" (needs n_trunc) and "convex-demo".
ProgramInstance generate_example(std::string_view name, std::size_t n_trunc,
                                 const std::vector<Rational>& grid,
                                 ScalarMode mode);

/// Constraint rows with the shifted objective row f - f(x0) appended last;
/// the matrix whose row set is the program's combined family. Simplex
/// vectors over it keep that ordering (objective weight last).
template <class T>
Matrix<T> combined_family(const ProgramInstance& inst) {
  if (!inst.x0_index) throw Error::invalid("x0_index is not set");
  const std::size_t l = inst.num_rows(), n = inst.num_points();
  Matrix<T> out(l + 1, n);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = ScalarTraits<T>::from_rational(inst.constraints.at(i, j));
    }
  }
  const T f0 = ScalarTraits<T>::from_rational(inst.objective[*inst.x0_index]);
  for (std::size_t j = 0; j < n; ++j) {
    out.at(l, j) = ScalarTraits<T>::from_rational(inst.objective[j]) - f0;
  }
  return out;
}

/// Sampled points whose worst constraint value is <= tol.
template <class T>
std::vector<std::size_t> feasible_indices(const ProgramInstance& inst, const T& tol) {
  const Matrix<T> g = matrix_from_rational<T>(inst.constraints);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (!(g.column_max(j) > tol)) out.push_back(j);
  }
  return out;
}

/// Optimality gap f(x0) - min f over the feasible sample; <= tol means x0
/// is sample-optimal. Errors when x0 is missing/infeasible or nothing is
/// feasible at tol.
template <class T>
T assert_optimal(const ProgramInstance& inst, const T& tol) {
  if (!inst.x0_index) throw Error::invalid("x0_index is not set");
  const std::vector<std::size_t> feas = feasible_indices<T>(inst, tol);
  if (feas.empty()) throw Error::invalid("feasible set is empty on the sample");
  bool x0_feasible = false;
  for (std::size_t j : feas) x0_feasible = x0_feasible || j == *inst.x0_index;
  if (!x0_feasible) {
    throw Error::invalid("x0 (" + inst.x_labels[*inst.x0_index] +
                         ") is infeasible on the sample");
  }
  const std::vector<T> f = vector_from_rational<T>(inst.objective);
  T best = f[feas.front()];
  for (std::size_t j : feas) {
    if (f[j] < best) best = f[j];
  }
  return T(f[*inst.x0_index] - best);
}

}  // namespace infsup
