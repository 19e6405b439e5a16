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

#include "infsup/instance.hpp"
#include "infsup/konig.hpp"
#include "oracles.hpp"

using namespace infsup;

namespace {

const Rational kTolLiteral(1, 1000000000);

// Witness re-check by direct matrix arithmetic, independent of the
// extraction code path.
template <class T>
void check_witness(const Matrix<T>& family, const ConvexityWitness<T>& w,
                   const T& tol) {
  REQUIRE(!w.support.empty());
  REQUIRE(w.support.size() == w.weights.weights.size());
  T rhs{};
  for (std::size_t i = 0; i < family.rows(); ++i) {
    T acc(0);
    for (std::size_t k = 0; k < w.support.size(); ++k) {
      acc += w.weights.weights[k] * family.at(i, w.support[k]);
    }
    if (i == 0 || acc > rhs) rhs = acc;
  }
  CHECK(!(abs_value<T>(rhs - w.rhs) > tol + tol));
  CHECK(pure_minimax_value(family) == w.lhs);
  CHECK(w.gap > tol);
  CHECK(!(abs_value<T>(T(w.lhs - w.rhs) - w.gap) > tol));
}

}  // namespace

TEST_CASE_TEMPLATE("pure infsup value scans columns", T, double, Rational) {
  CHECK(pure_minimax_value(Matrix<T>::from_rows({{T(0)}})) == T(0));
  CHECK(pure_minimax_value(Matrix<T>::from_rows({{T(1), T(-1)}, {T(-1), T(1)}})) ==
        T(1));

  const ProgramInstance inst = generate_cubic_counterexample(
      3, parse_number_list("-2,-1,0,1,2,10"), ScalarTraits<T>::mode);
  std::size_t col = 0;
  const T value = pure_minimax_value(combined_family<T>(inst), &col);
  CHECK(value == T(0));
  CHECK(col == 2);  // the grid point 0
}

TEST_CASE_TEMPLATE("single column matrices are convex on the sample", T, double,
                   Rational) {
  const Matrix<T> a = Matrix<T>::from_rows({{T(3)}, {T(-5)}, {T(0)}});
  const ConvexityVerdict<T> v =
      check_infsup_convexity(a, ScalarTraits<T>::tolerance(kTolLiteral));
  CHECK(v.kind == ConvexityKind::ConvexOnSample);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE_TEMPLATE("matching pennies rows are not infsup-convex", T, double,
                   Rational) {
  const Matrix<T> a = Matrix<T>::from_rows({{T(1), T(-1)}, {T(-1), T(1)}});
  const T tol = ScalarTraits<T>::tolerance(kTolLiteral);
  const ConvexityVerdict<T> v = check_infsup_convexity(a, tol);
  REQUIRE(v.kind == ConvexityKind::Witness);
  check_witness(a, *v.witness, tol);
  // the even mixture is the unique optimum here
  CHECK(v.witness->support == std::vector<std::size_t>{0, 1});
  CHECK(!(abs_value<T>(v.witness->weights.weights[0] - T(1) / T(2)) > tol));
  CHECK(v.witness->lhs == T(1));
  CHECK(!(abs_value<T>(v.witness->rhs) > tol));
  CHECK(!(abs_value<T>(v.witness->gap - T(1)) > tol));
}

TEST_CASE("cubic family witness beats the hand-made mixture") {
  // Putting weight 0.01 on x=10 and 0.99 on x=-1 gives
  // rhs = max{-(0.01*1000 - 0.99)/n over n, 0.01*10 - 0.99} = -0.89,
  // so the optimal witness gap is at least 0.89.
  const ProgramInstance inst = generate_cubic_counterexample(
      3, parse_number_list("-2,-1,-0.5,0,0.5,1,2,10"), ScalarMode::Rational);
  const Matrix<Rational> family = combined_family<Rational>(inst);
  const ConvexityVerdict<Rational> v = check_infsup_convexity(family, Rational(0));
  REQUIRE(v.kind == ConvexityKind::Witness);
  check_witness(family, *v.witness, Rational(0));
  CHECK(v.witness->gap >= Rational(89, 100));
  CHECK(v.witness->lhs == Rational(0));
}

TEST_CASE_TEMPLATE("konig functional: all-ones row dominates zero", T, double,
                   Rational) {
  const Matrix<T> g = Matrix<T>::from_rows({{T(1), T(1), T(1)}});
  const std::vector<T> f(3, T(0));
  const KonigResult<T> r =
      konig_functional(f, g, T(0), ScalarTraits<T>::tolerance(kTolLiteral));
  REQUIRE(r.has_functional());
  CHECK(r.phi->weights == std::vector<T>{T(1)});
}

TEST_CASE_TEMPLATE("konig functional: antisymmetric game forces the even mixture",
                   T, double, Rational) {
  const Matrix<T> g = Matrix<T>::from_rows({{T(1), T(-1)}, {T(-1), T(1)}});
  const std::vector<T> f(2, T(0));
  const T tol = ScalarTraits<T>::tolerance(kTolLiteral);
  const KonigResult<T> r = konig_functional(f, g, T(0), tol);
  REQUIRE(r.has_functional());
  // 2t - 1 >= 0 and 1 - 2t >= 0 force phi = (1/2, 1/2)
  CHECK(!(abs_value<T>(r.phi->weights[0] - T(1) / T(2)) > tol));
  CHECK(!(abs_value<T>(r.phi->weights[1] - T(1) / T(2)) > tol));
}

TEST_CASE_TEMPLATE("konig functional: shifted game yields the witness", T, double,
                   Rational) {
  const Matrix<T> g = Matrix<T>::from_rows({{T(-1), T(1)}, {T(1), T(-1)}});
  const std::vector<T> f(2, T(0));
  const T tol = ScalarTraits<T>::tolerance(kTolLiteral);
  // Hypothesis holds with equality: sup per column is 1 = 0 + alpha.
  const KonigResult<T> r = konig_functional(f, g, T(1), tol);
  REQUIRE_FALSE(r.has_functional());
  REQUIRE(r.witness.has_value());
  CHECK(!(abs_value<T>(r.v_mixed_shifted + T(1)) > tol));
  CHECK(r.witness->support == std::vector<std::size_t>{0, 1});
  CHECK(!(abs_value<T>(r.witness->weights.weights[0] - T(1) / T(2)) > tol));
  // witness is stated for the family g - f
  Matrix<T> family = g;
  check_witness(family, *r.witness, tol);
}

TEST_CASE_TEMPLATE("konig hypothesis violations name the column", T, double,
                   Rational) {
  const Matrix<T> g = Matrix<T>::from_rows({{T(0), T(-2)}});
  const std::vector<T> f = {T(0), T(0)};
  CHECK_THROWS_WITH_AS(
      konig_functional(f, g, T(1), ScalarTraits<T>::tolerance(kTolLiteral)),
      doctest::Contains("column 0"), Error);
}

TEST_CASE_TEMPLATE("mazur-orlicz functional on point sets", T, double, Rational) {
  const T tol = ScalarTraits<T>::tolerance(kTolLiteral);
  SUBCASE("single zero point") {
    const MazurOrliczResult<T> r = mazur_orlicz_functional<T>({{T(0), T(0)}}, tol);
    CHECK(r.value == T(0));
    CHECK(r.phi.weights.size() == 2);
  }
  SUBCASE("antisymmetric pair balances") {
    const MazurOrliczResult<T> r =
        mazur_orlicz_functional<T>({{T(1), T(-1)}, {T(-1), T(1)}}, tol);
    CHECK(!(abs_value<T>(r.value) > tol));
    CHECK(!(abs_value<T>(r.phi.weights[0] - T(1) / T(2)) > tol));
  }
  SUBCASE("constant point") {
    const MazurOrliczResult<T> r = mazur_orlicz_functional<T>({{T(2), T(2)}}, tol);
    CHECK(r.value == T(2));
    T pairing(0);
    for (const T& w : r.phi.weights) pairing += w * T(2);
    CHECK(!(abs_value<T>(pairing - T(2)) > tol));
  }
  SUBCASE("mixed dimensions are rejected") {
    CHECK_THROWS_AS(mazur_orlicz_functional<T>({{T(1)}, {T(1), T(2)}}, tol), Error);
  }
}

TEST_CASE("characterization equivalence: functional exists iff convex on sample") {
  std::mt19937 rng(123u);
  int witnesses = 0, functionals = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix<Rational> g = oracles::random_half_integer_matrix(rng, 4, 6, -3, 3);
    const std::vector<Rational> f =
        oracles::random_half_integer_vector(rng, g.cols(), -3, 3);

    // family under test: rows of g - f
    Matrix<Rational> family(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        family.at(i, j) = g.at(i, j) - f[j];
      }
    }
    const ConvexityVerdict<Rational> verdict =
        check_infsup_convexity(family, Rational(0));

    // the sharp shift: alpha* = pure infsup of the family
    const Rational alpha_star = pure_minimax_value(family);
    const KonigResult<Rational> res =
        konig_functional(f, g, alpha_star, Rational(0));

    CHECK(res.has_functional() ==
          (verdict.kind == ConvexityKind::ConvexOnSample));
    if (res.has_functional()) {
      ++functionals;
      // zero-residual column domination in exact arithmetic
      const std::vector<Rational> values = g.row_mixture_times(res.phi->weights);
      for (std::size_t j = 0; j < g.cols(); ++j) {
        CHECK(values[j] >= f[j] + alpha_star);
      }
    } else {
      ++witnesses;
      check_witness(family, *res.witness, Rational(0));
    }
  }
  CHECK(witnesses > 10);
  CHECK(functionals > 10);
}

TEST_CASE("shift covariance: adding alpha to f is the same as shifting") {
  std::mt19937 rng(321u);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix<Rational> g = oracles::random_half_integer_matrix(rng, 3, 5, -3, 3);
    std::vector<Rational> f =
        oracles::random_half_integer_vector(rng, g.cols(), -2, 2);
    const Rational alpha(trial % 5 - 2, 2);

    // keep only cases where the hypothesis holds for this alpha
    bool hypothesis = true;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rational colmax = g.at(0, j);
      for (std::size_t i = 1; i < g.rows(); ++i) {
        if (g.at(i, j) > colmax) colmax = g.at(i, j);
      }
      hypothesis = hypothesis && colmax >= f[j] + alpha;
    }
    if (!hypothesis) continue;

    const KonigResult<Rational> direct = konig_functional(f, g, alpha, Rational(0));
    std::vector<Rational> f_shifted = f;
    for (Rational& v : f_shifted) v += alpha;
    const KonigResult<Rational> shifted =
        konig_functional(f_shifted, g, Rational(0), Rational(0));

    CHECK(direct.has_functional() == shifted.has_functional());
    if (direct.has_functional()) {
      // any functional valid for one form is valid for the other
      const std::vector<Rational> values = g.row_mixture_times(direct.phi->weights);
      for (std::size_t j = 0; j < g.cols(); ++j) {
        CHECK(values[j] >= f_shifted[j]);
      }
    }
  }
}

TEST_CASE("witness support respects the basic-solution bound") {
  std::mt19937 rng(555u);
  int seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix<Rational> a = oracles::random_half_integer_matrix(rng, 4, 8, -3, 3);
    const ConvexityVerdict<Rational> v = check_infsup_convexity(a, Rational(0));
    if (v.kind != ConvexityKind::Witness) continue;
    ++seen;
    CHECK(v.witness->support.size() <= a.rows() + 1);
  }
  CHECK(seen > 5);
}
