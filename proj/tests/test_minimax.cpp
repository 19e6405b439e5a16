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

#include <doctest.h>

#include <cmath>
#include <random>

#include "infsup/minimax.hpp"
#include "oracles.hpp"

using namespace infsup;

namespace {

const Rational kTolLiteral(1, 1000000000);

double as_double(double v) { return v; }
double as_double(const Rational& v) { return rational_to_double(v); }

template <class T>
Matrix<T> mat2(const T& a00, const T& a01, const T& a10, const T& a11) {
  return Matrix<T>::from_rows({{a00, a01}, {a10, a11}});
}

}  // namespace

TEST_CASE_TEMPLATE("single-cell game", T, double, Rational) {
  const Matrix<T> a = Matrix<T>::from_rows({{T(0)}});
  const MinimaxReport<T> r = minimax(a, ScalarTraits<T>::tolerance(kTolLiteral));
  CHECK(r.v_pure == T(0));
  CHECK(r.v_mixed == T(0));
  CHECK(r.mu.weights == std::vector<T>{T(1)});
  CHECK(r.phi.weights == std::vector<T>{T(1)});
  CHECK(r.equal);
}

TEST_CASE_TEMPLATE("matching pennies mixes evenly", T, double, Rational) {
  // Oracle: crossing of t-(1-t) and (1-t)-t at t = 1/2, value 0.
  const Matrix<T> a = mat2(T(1), T(-1), T(-1), T(1));
  CHECK(oracles::game2x2_value(a) == T(0));

  const MinimaxReport<T> r = minimax(a, ScalarTraits<T>::tolerance(kTolLiteral));
  CHECK(as_double(r.v_mixed) == doctest::Approx(0).epsilon(1e-12));
  CHECK(r.v_pure == T(1));  // both columns max out at 1
  CHECK(r.pure_col == 0);   // tie broken toward the lowest index
  CHECK_FALSE(r.equal);
  CHECK(std::abs(as_double(r.mu.weights[0]) - 0.5) <= 1e-9);
  CHECK(std::abs(as_double(r.phi.weights[0]) - 0.5) <= 1e-9);
  if constexpr (ScalarTraits<T>::mode == ScalarMode::Rational) {
    CHECK(r.v_mixed == T(0));
    CHECK(r.mu.weights == std::vector<T>{Rational(1, 2), Rational(1, 2)});
    CHECK(r.phi.weights == std::vector<T>{Rational(1, 2), Rational(1, 2)});
  }
}

TEST_CASE_TEMPLATE("off-diagonal penalties reward mixing", T, double, Rational) {
  // Oracle: rows cross at t = 1/2 with value -1/2; pure value is 0.
  const Matrix<T> a = mat2(T(0), T(-1), T(-1), T(0));
  if constexpr (ScalarTraits<T>::mode == ScalarMode::Rational) {
    CHECK(oracles::game2x2_value(a) == Rational(-1, 2));
  }
  const MinimaxReport<T> r = minimax(a, ScalarTraits<T>::tolerance(kTolLiteral));
  CHECK(r.v_pure == T(0));
  CHECK(std::abs(as_double(r.v_mixed) + 0.5) <= 1e-9);
  CHECK(std::abs(as_double(r.mu.weights[0]) - 0.5) <= 1e-9);
}

TEST_CASE("all 81 sign-pattern 2x2 games match the closed form, both modes") {
  const int values[3] = {-1, 0, 1};
  for (int a : values) {
    for (int b : values) {
      for (int c : values) {
        for (int d : values) {
          const Matrix<Rational> ar =
              mat2(Rational(a), Rational(b), Rational(c), Rational(d));
          const MinimaxReport<Rational> rr = minimax(ar, Rational(0));
          CHECK(rr.v_mixed == oracles::game2x2_value(ar));

          const Matrix<double> af = mat2<double>(a, b, c, d);
          const MinimaxReport<double> rf = minimax(af, 1e-9);
          CHECK(std::abs(rf.v_mixed - oracles::game2x2_value(af)) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("weak duality on 200 random real matrices") {
  std::mt19937 rng(42u);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix<double> a = oracles::random_real_matrix(rng, 6, 8, -2.0, 2.0);
    const MinimaxReport<double> r = minimax(a, 1e-9);
    CHECK(r.v_mixed <= r.v_pure + 1e-9);

    // strong duality residual straight from the certificates
    const std::vector<double> cols = a.row_mixture_times(r.phi.weights);
    double dual_side = cols[0];
    for (double v : cols) dual_side = std::min(dual_side, v);
    CHECK(std::abs(dual_side - r.v_mixed) <= 1e-8);
  }
}

TEST_CASE("modes agree on random half-integer matrices") {
  std::mt19937 rng(7u);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix<Rational> a = oracles::random_half_integer_matrix(rng, 5, 6, -2, 2);
    const MinimaxReport<Rational> rr = minimax(a, Rational(0));
    const MinimaxReport<double> rf = minimax(matrix_from_rational<double>(a), 1e-9);
    CHECK(std::abs(rational_to_double(rr.v_mixed) - rf.v_mixed) <= 1e-9);
    CHECK(rational_to_double(rr.v_pure) == rf.v_pure);

    // dual certificate is exact in rational mode
    const std::vector<Rational> cols = a.row_mixture_times(rr.phi.weights);
    Rational dual_side = cols[0];
    for (const Rational& v : cols) {
      if (v < dual_side) dual_side = v;
    }
    CHECK(dual_side == rr.v_mixed);
  }
}

TEST_CASE("affine transforms of the game move the value affinely") {
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> cdist(0.25, 3.0), ddist(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix<double> a = oracles::random_real_matrix(rng, 5, 6, -2.0, 2.0);
    const double c = cdist(rng), d = ddist(rng);
    Matrix<double> b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = c * a.at(i, j) + d;
    }
    const MinimaxReport<double> ra = minimax(a, 1e-9);
    const MinimaxReport<double> rb = minimax(b, 1e-9);
    CHECK(std::abs(rb.v_mixed - (c * ra.v_mixed + d)) <= 1e-7);

    // the original optimal pair stays optimal for the transformed game
    const std::vector<double> rows = b.times_column_mixture(ra.mu.weights);
    double primal_side = rows[0];
    for (double v : rows) primal_side = std::max(primal_side, v);
    CHECK(primal_side <= rb.v_mixed + 1e-7);
    const std::vector<double> cols = b.row_mixture_times(ra.phi.weights);
    double dual_side = cols[0];
    for (double v : cols) dual_side = std::min(dual_side, v);
    CHECK(dual_side >= rb.v_mixed - 1e-7);
  }
}

TEST_CASE_TEMPLATE("rectangular games keep certificates consistent", T, double,
                   Rational) {
  const Matrix<T> a = Matrix<T>::from_rows({{T(2), T(-1), T(0), T(1)},
                                            {T(-1), T(2), T(1), T(0)},
                                            {T(0), T(0), T(-2), T(3)}});
  const T tol = ScalarTraits<T>::tolerance(kTolLiteral);
  const MinimaxReport<T> r = minimax(a, tol);
  CHECK(!(r.v_mixed > r.v_pure + tol));
  const std::vector<T> rows = a.times_column_mixture(r.mu.weights);
  for (const T& v : rows) CHECK(!(v > r.v_mixed + tol + tol));
}
