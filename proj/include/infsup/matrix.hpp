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

#include "infsup/error.hpp"
#include "infsup/scalar.hpp"

namespace infsup {

/// Dense row-major matrix. All problems here are desk scale, so no attempt
/// at sparsity or blocking.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) throw Error::invalid("matrix has no rows");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw Error::invalid("matrix row " + std::to_string(i) +
                             " has length " + std::to_string(rows[i].size()) +
                             ", expected " + std::to_string(m.cols_));
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T column_max(std::size_t j) const {
    T best = at(0, j);
    for (std::size_t i = 1; i < rows_; ++i) {
      if (at(i, j) > best) best = at(i, j);
    }
    return best;
  }

  std::vector<T> times_column_mixture(const std::vector<T>& mu) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * mu[j];
      out[i] = acc;
    }
    return out;
  }

  std::vector<T> row_mixture_times(const std::vector<T>& phi) const {
    std::vector<T> out(cols_, T(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      T acc(0);
      for (std::size_t i = 0; i < rows_; ++i) acc += phi[i] * at(i, j);
      out[j] = acc;
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> matrix_from_rational(const Matrix<Rational>& in) {
  Matrix<T> out(in.rows(), in.cols());
  for (std::size_t i = 0; i < in.rows(); ++i) {
    for (std::size_t j = 0; j < in.cols(); ++j) {
      out.at(i, j) = ScalarTraits<T>::from_rational(in.at(i, j));
    }
  }
  return out;
}

template <class T>
std::vector<T> vector_from_rational(const std::vector<Rational>& in) {
  std::vector<T> out;
  out.reserve(in.size());
  for (const Rational& q : in) out.push_back(ScalarTraits<T>::from_rational(q));
  return out;
}

/// Point of the probability simplex: nonnegative weights summing to one.
/// Rational vectors are validated exactly; float vectors straight out of a
/// simplex basis may carry roundoff, so `checked` clamps negative dust and
/// renormalizes, rejecting anything worse than kRepairTol.
template <class T>
struct SimplexVector {
  std::vector<T> weights;

  std::size_t dimension() const { return weights.size(); }

  static constexpr double kRepairTol = 1e-9;
  static constexpr double kSumTol = 1e-12;

  static SimplexVector checked(std::vector<T> w) {
    if (w.empty()) throw Error::numerical("empty simplex vector");
    if constexpr (ScalarTraits<T>::mode == ScalarMode::Rational) {
      T sum(0);
      for (const T& v : w) {
        if (v < T(0)) throw Error::numerical("negative simplex weight");
        sum += v;
      }
      if (sum != T(1)) throw Error::numerical("simplex weights do not sum to one");
      return SimplexVector{std::move(w)};
    } else {
      T sum(0);
      for (T& v : w) {
        if (v < -kRepairTol) throw Error::numerical("negative simplex weight");
        if (v < T(0)) v = T(0);
        sum += v;
      }
      if (abs_value<T>(sum - T(1)) > kRepairTol) {
        throw Error::numerical("simplex weights do not sum to one");
      }
      for (T& v : w) v /= sum;
      return SimplexVector{std::move(w)};
    }
  }
};

}  // namespace infsup
