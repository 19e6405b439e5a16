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
#include <vector>

#include "infsup/minimax.hpp"

namespace infsup {

enum class ConvexityKind { ConvexOnSample, Witness };

/// Finite convex combination of sampled points that pushes the row-wise
/// supremum strictly below the pure infsup value: support columns x_1..x_m,
/// weights t in the simplex, lhs = min over columns of max over rows, and
/// rhs = max over rows of sum_j t_j A[row][x_j], recomputed directly from
/// the matrix. gap = lhs - rhs > tol certifies the family is not
/// infsup-convex; the combination itself transfers to the full problem.
template <class T>
struct ConvexityWitness {
  std::vector<std::size_t> support;
  SimplexVector<T> weights;
  T lhs{};
  T rhs{};
  T gap{};
};

template <class T>
struct ConvexityVerdict {
  ConvexityKind kind = ConvexityKind::ConvexOnSample;
  std::optional<ConvexityWitness<T>> witness;
  T v_pure{};
  T v_mixed{};
};

namespace detail {

/// Turns an optimal column mixture into a pruned, renormalized witness and
/// recomputes its sides from the matrix. In float mode dust weights below
/// 1e-12 are dropped; in rational mode only exact zeros are.
template <class T>
ConvexityWitness<T> extract_witness(const Matrix<T>& a, const SimplexVector<T>& mu,
                                    const T& v_pure) {
  T prune(0);
  if constexpr (ScalarTraits<T>::mode == ScalarMode::Float64) prune = 1e-12;

  ConvexityWitness<T> w;
  std::vector<T> kept;
  for (std::size_t j = 0; j < mu.weights.size(); ++j) {
    if (mu.weights[j] > prune) {
      w.support.push_back(j);
      kept.push_back(mu.weights[j]);
    }
  }
  w.weights = SimplexVector<T>::checked(std::move(kept));

  T rhs{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc(0);
    for (std::size_t k = 0; k < w.support.size(); ++k) {
      acc += w.weights.weights[k] * a.at(i, w.support[k]);
    }
    if (i == 0 || acc > rhs) rhs = acc;
  }
  w.lhs = v_pure;
  w.rhs = rhs;
  w.gap = T(v_pure - rhs);
  return w;
}

}  // namespace detail

/// Verdict on whether the matrix rows, viewed as a family of functions of
/// the sampled column points, are infsup-convex over the sample: mixing
/// columns can never beat the best pure column. The LP optimum settles the
/// question for all combination sizes and weights at once, and a failing
/// mixture is returned as a checked witness.
template <class T>
ConvexityVerdict<T> check_infsup_convexity(const Matrix<T>& a, const T& tol) {
  const MinimaxReport<T> game = minimax(a, tol);
  ConvexityVerdict<T> verdict;
  verdict.v_pure = game.v_pure;
  verdict.v_mixed = game.v_mixed;
  if (game.v_mixed < game.v_pure - tol) {
    verdict.kind = ConvexityKind::Witness;
    verdict.witness = detail::extract_witness(a, game.mu, game.v_pure);
    if (!(verdict.witness->gap > tol)) {
      throw Error::numerical("witness gap collapsed under recomputation");
    }
  }
  return verdict;
}

/// Either a functional phi in the row simplex with
///   f(x) + alpha <= phi . G(., x) for every sampled column x,
/// or a witness that the shifted family (g_row - f) is not infsup-convex on
/// the sample, in which case no such functional can exist for any admissible
/// alpha.
template <class T>
struct KonigResult {
  std::optional<SimplexVector<T>> phi;
  std::optional<ConvexityWitness<T>> witness;
  T v_mixed_shifted{};  // game value of G - f - alpha

  bool has_functional() const { return phi.has_value(); }
};

template <class T>
KonigResult<T> konig_functional(const std::vector<T>& f, const Matrix<T>& g,
                                const T& alpha, const T& tol) {
  if (g.empty()) throw Error::invalid("empty constraint matrix");
  if (f.size() != g.cols()) {
    throw Error::invalid("objective length " + std::to_string(f.size()) +
                         " does not match " + std::to_string(g.cols()) + " columns");
  }

  Matrix<T> shifted(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      shifted.at(i, j) = T(g.at(i, j) - f[j] - alpha);
    }
  }
  // Domination hypothesis: f + alpha <= sup over rows, column by column.
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (shifted.column_max(j) < -tol) {
      throw Error::invalid("hypothesis fails at column " + std::to_string(j) +
                           ": sup of the family is below f + alpha there");
    }
  }

  const MinimaxReport<T> game = minimax(shifted, tol);
  KonigResult<T> result;
  result.v_mixed_shifted = game.v_mixed;
  if (!(game.v_mixed < -tol)) {
    // Certify before returning: phi . G(., x) >= f(x) + alpha on the sample.
    const std::vector<T> values = g.row_mixture_times(game.phi.weights);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (values[j] < T(f[j] + alpha - tol)) {
        throw Error::numerical("functional failed column recheck");
      }
    }
    result.phi = game.phi;
    return result;
  }

  // Witness reported against the unshifted family (g_row - f); the same
  // mixture works since alpha cancels out of the gap.
  Matrix<T> family(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      family.at(i, j) = T(g.at(i, j) - f[j]);
    }
  }
  result.witness =
      detail::extract_witness(family, game.mu, pure_minimax_value(family));
  if (!(result.witness->gap > tol)) {
    throw Error::numerical("witness gap collapsed under recomputation");
  }
  return result;
}

/// Functional in the coordinate simplex matching the minimum of the
/// coordinate-max over the convex hull of the given points:
///   min over hull of phi . p  =  min over hull of max-coordinate  =  value.
template <class T>
struct MazurOrliczResult {
  SimplexVector<T> phi;
  T value{};
};

template <class T>
MazurOrliczResult<T> mazur_orlicz_functional(const std::vector<std::vector<T>>& points,
                                             const T& tol) {
  if (points.empty()) throw Error::invalid("no points given");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw Error::invalid("points must have dimension >= 1");
  for (const auto& p : points) {
    if (p.size() != dim) throw Error::invalid("points have mixed dimensions");
  }
  Matrix<T> columns(dim, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) columns.at(i, j) = points[j][i];
  }
  const MinimaxReport<T> game = minimax(columns, tol);
  return MazurOrliczResult<T>{game.phi, game.v_mixed};
}

}  // namespace infsup
