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

#include "infsup/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "infsup/error.hpp"

namespace infsup {

namespace {

// Exponents beyond this would materialize absurdly large integers.
constexpr long kMaxDecimalExponent = 9999;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error::invalid("not a valid number: '" + std::string(text) + "'");
}

Rational parse_fraction(std::string_view text, std::string_view whole) {
  const std::size_t slash = whole.find('/');
  std::string_view num = trim(whole.substr(0, slash));
  std::string_view den = trim(whole.substr(slash + 1));
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) bad_number(text);
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw Error::invalid("zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

Rational parse_decimal(std::string_view text, std::string_view body) {
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  const std::size_t epos = body.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view etxt = body.substr(epos + 1);
    body = body.substr(0, epos);
    bool eneg = false;
    if (!etxt.empty() && (etxt.front() == '+' || etxt.front() == '-')) {
      eneg = etxt.front() == '-';
      etxt.remove_prefix(1);
    }
    if (!all_digits(etxt) || etxt.size() > 6) bad_number(text);
    exponent = std::strtol(std::string(etxt).c_str(), nullptr, 10);
    if (eneg) exponent = -exponent;
  }

  std::string digits;
  const std::size_t dot = body.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(body)) bad_number(text);
    digits = std::string(body);
  } else {
    std::string_view ipart = body.substr(0, dot);
    std::string_view fpart = body.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) bad_number(text);
    if (!ipart.empty() && !all_digits(ipart)) bad_number(text);
    if (!fpart.empty() && !all_digits(fpart)) bad_number(text);
    digits = std::string(ipart) + std::string(fpart);
    exponent -= static_cast<long>(fpart.size());
  }
  if (digits.empty()) bad_number(text);
  if (exponent > kMaxDecimalExponent || exponent < -kMaxDecimalExponent) {
    throw Error::invalid("exponent out of range in '" + std::string(text) + "'");
  }

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10,
                static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q;
  if (exponent >= 0) {
    q = Rational(mantissa * pow10);
  } else {
    q = Rational(mantissa, pow10);
  }
  q.canonicalize();
  return q;
}

}  // namespace

std::string_view scalar_mode_name(ScalarMode mode) {
  return mode == ScalarMode::Float64 ? "float64" : "exact-rational";
}

ScalarMode scalar_mode_from_name(std::string_view name) {
  if (name == "float64") return ScalarMode::Float64;
  if (name == "exact-rational") return ScalarMode::Rational;
  throw Error::invalid("unknown scalar mode: '" + std::string(name) + "'");
}

Rational rational_from_string(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) bad_number(text);
  if (body.find('/') != std::string_view::npos) return parse_fraction(text, body);
  return parse_decimal(text, body);
}

std::string rational_to_fraction(const Rational& value) {
  return value.get_str();
}

std::string rational_to_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) return rational_to_fraction(value);  // no finite decimal

  const unsigned long places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str();

  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
  mpz_class scaled = value.get_num() * pow10 / value.get_den();

  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= places) {
    digits.insert(0, places - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return negative ? "-" + digits : digits;
}

double rational_to_double(const Rational& value) {
  // mpq_get_d truncates toward zero; going through the exact decimal string
  // (when one exists) gives round-to-nearest, so "0.1" converts to the same
  // double a plain strtod would produce.
  const std::string decimal = rational_to_decimal(value);
  if (decimal.find('/') == std::string::npos) {
    return std::strtod(decimal.c_str(), nullptr);
  }
  return mpq_get_d(value.get_mpq_t());
}

}  // namespace infsup
