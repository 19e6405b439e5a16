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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace infsup {

/// Arithmetic backend of an instance or matrix. Float64 computes in IEEE
/// doubles under a tolerance; Rational computes in arbitrary-precision
/// rationals with zero tolerance, so every verdict is an exact sign test.
enum class ScalarMode { Float64, Rational };

using Rational = mpq_class;

std::string_view scalar_mode_name(ScalarMode mode);
ScalarMode scalar_mode_from_name(std::string_view name);

/// Parses "a/b", integer, or decimal notation (optional exponent) into an
/// exact rational: "0.5" -> 1/2, "-1.25e-3" -> -1/800, "2/6" -> 1/3.
/// Throws Error(InvalidInput) on malformed text, zero denominator, or an
/// exponent too large to materialize.
Rational rational_from_string(std::string_view text);

/// Canonical "n/d" (or plain "n" when d = 1).
std::string rational_to_fraction(const Rational& value);

/// Exact decimal string when the denominator is of the form 2^a * 5^b,
/// otherwise falls back to "n/d". Never loses precision.
std::string rational_to_decimal(const Rational& value);

double rational_to_double(const Rational& value);

/// Value semantics shared by the templated numerics. The only mode-dependent
/// knobs are how instance data (stored as rationals) converts into T and what
/// "tolerance" means: Float64 carries the CLI tolerance, Rational pins it to
/// zero so all comparisons are exact.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr ScalarMode mode = ScalarMode::Float64;
  static double from_rational(const Rational& q) { return rational_to_double(q); }
  static double tolerance(const Rational& requested) {
    return rational_to_double(requested);
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarMode mode = ScalarMode::Rational;
  static Rational from_rational(const Rational& q) { return q; }
  static Rational tolerance(const Rational&) { return Rational(0); }
};

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : T(x);
}

}  // namespace infsup
