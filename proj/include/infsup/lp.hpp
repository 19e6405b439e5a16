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
#include <cstdint>
#include <string>
#include <vector>

#include "infsup/error.hpp"
#include "infsup/matrix.hpp"
#include "infsup/scalar.hpp"

namespace infsup {

enum class Rel { Le, Eq, Ge };

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// minimize objective . z
/// subject to lhs[i] . z  (rel[i])  rhs[i]      for every row i
///            z[j] >= 0 unless is_free[j]
template <class T>
struct LpProblem {
  std::vector<T> objective;
  Matrix<T> lhs;
  std::vector<Rel> rel;
  std::vector<T> rhs;
  std::vector<bool> is_free;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rhs.size(); }

  void validate() const {
    if (lhs.rows() != rhs.size() || lhs.rows() != rel.size()) {
      throw Error::invalid("LP row count mismatch");
    }
    if (lhs.cols() != objective.size() || is_free.size() != objective.size()) {
      throw Error::invalid("LP column count mismatch");
    }
    if (lhs.empty()) throw Error::invalid("empty LP");
  }
};

/// Certified outcome. Duals follow the minimization convention:
/// y[i] <= 0 on Le rows, y[i] >= 0 on Ge rows, free on Eq rows, and
/// objective value equals rhs . dual at an optimum. A Farkas vector obeys the
/// same row signs while (farkas^T lhs)[j] <= 0 for sign-constrained columns
/// (= 0 for free ones) and farkas . rhs > 0, an arithmetic proof that no
/// feasible point exists.
template <class T>
struct LpOutcome {
  LpStatus status = LpStatus::Optimal;
  std::vector<T> primal;
  std::vector<T> dual;
  std::vector<T> farkas;
  T value{};
};

template <class T>
bool verify_farkas(const LpProblem<T>& p, const std::vector<T>& y, const T& tol) {
  p.validate();
  if (y.size() != p.num_rows()) throw Error::invalid("Farkas vector length mismatch");
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (p.rel[i] == Rel::Le && y[i] > tol) return false;
    if (p.rel[i] == Rel::Ge && y[i] < -tol) return false;
  }
  T combined_rhs(0);
  for (std::size_t i = 0; i < p.num_rows(); ++i) combined_rhs += y[i] * p.rhs[i];
  if (!(combined_rhs > tol)) return false;
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    T coef(0);
    for (std::size_t i = 0; i < p.num_rows(); ++i) coef += y[i] * p.lhs.at(i, j);
    if (p.is_free[j]) {
      if (abs_value<T>(coef) > tol) return false;
    } else if (coef > tol) {
      return false;
    }
  }
  return true;
}

namespace detail {

/// Dense two-phase tableau simplex with Bland's rule. Artificial columns form
/// the starting identity basis, which doubles as the record of B^-1 the dual
/// and Farkas extraction read from.
template <class T>
class SimplexTableau {
 public:
  SimplexTableau(const LpProblem<T>& p, const T& tol)
      : p_(p), tol_(tol), m_(p.num_rows()) {
    if constexpr (ScalarTraits<T>::mode == ScalarMode::Float64) {
      pivot_eps_ = 1e-11;
    } else {
      pivot_eps_ = T(0);
    }

    pos_col_.assign(p.num_vars(), 0);
    neg_col_.assign(p.num_vars(), SIZE_MAX);
    std::size_t c = 0;
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      pos_col_[j] = c++;
      if (p.is_free[j]) neg_col_[j] = c++;
    }
    slack_col_.assign(m_, SIZE_MAX);
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.rel[i] != Rel::Eq) slack_col_[i] = c++;
    }
    art_col_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) art_col_[i] = c++;
    ncols_ = c;

    flip_.assign(m_, false);
    tab_.assign(m_, std::vector<T>(ncols_ + 1, T(0)));
    for (std::size_t i = 0; i < m_; ++i) {
      flip_[i] = p.rhs[i] < T(0);
      const T sign = flip_[i] ? T(-1) : T(1);
      for (std::size_t j = 0; j < p.num_vars(); ++j) {
        const T v = sign * p.lhs.at(i, j);
        tab_[i][pos_col_[j]] = v;
        if (neg_col_[j] != SIZE_MAX) tab_[i][neg_col_[j]] = -v;
      }
      if (slack_col_[i] != SIZE_MAX) {
        tab_[i][slack_col_[i]] = sign * (p.rel[i] == Rel::Le ? T(1) : T(-1));
      }
      tab_[i][art_col_[i]] = T(1);
      tab_[i][ncols_] = sign * p.rhs[i];
    }
    basis_.assign(m_, 0);
    in_basis_.assign(ncols_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = art_col_[i];
      in_basis_[art_col_[i]] = true;
    }
  }

  LpOutcome<T> run() {
    // Phase 1: minimize the sum of artificials from the identity basis.
    std::vector<T> cost1(ncols_, T(0));
    for (std::size_t i = 0; i < m_; ++i) cost1[art_col_[i]] = T(1);
    if (!iterate(cost1, /*bar_artificials=*/false)) {
      throw Error::numerical("phase-1 simplex diverged");
    }

    T infeas = objective_of(cost1);
    if (infeas > tol_) {
      LpOutcome<T> out;
      out.status = LpStatus::Infeasible;
      out.farkas = row_duals(cost1);
      return out;
    }
    drive_out_artificials();

    // Phase 2: original costs, artificials barred from re-entering.
    std::vector<T> cost2(ncols_, T(0));
    for (std::size_t j = 0; j < p_.num_vars(); ++j) {
      cost2[pos_col_[j]] = p_.objective[j];
      if (neg_col_[j] != SIZE_MAX) cost2[neg_col_[j]] = -p_.objective[j];
    }
    if (!iterate(cost2, /*bar_artificials=*/true)) {
      LpOutcome<T> out;
      out.status = LpStatus::Unbounded;
      return out;
    }

    LpOutcome<T> out;
    out.status = LpStatus::Optimal;
    out.primal.assign(p_.num_vars(), T(0));
    for (std::size_t j = 0; j < p_.num_vars(); ++j) {
      T v = basic_value(pos_col_[j]);
      if (neg_col_[j] != SIZE_MAX) v -= basic_value(neg_col_[j]);
      out.primal[j] = v;
    }
    out.dual = row_duals(cost2);
    T value(0);
    for (std::size_t j = 0; j < p_.num_vars(); ++j) {
      value += p_.objective[j] * out.primal[j];
    }
    out.value = value;
    return out;
  }

 private:
  T objective_of(const std::vector<T>& cost) const {
    T v(0);
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * tab_[i][ncols_];
    return v;
  }

  T basic_value(std::size_t col) const {
    if (!in_basis_[col]) return T(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] == col) return tab_[i][ncols_];
    }
    return T(0);
  }

  // y = c_B B^-1 read off the artificial columns, then unflipped to match
  // the original row orientation.
  std::vector<T> row_duals(const std::vector<T>& cost) const {
    std::vector<T> y(m_, T(0));
    for (std::size_t i = 0; i < m_; ++i) {
      T acc(0);
      for (std::size_t k = 0; k < m_; ++k) {
        acc += cost[basis_[k]] * tab_[k][art_col_[i]];
      }
      y[i] = flip_[i] ? T(-acc) : acc;
    }
    return y;
  }

  // Bland's rule on both choices; returns false when the entering column is
  // unbounded below.
  bool iterate(const std::vector<T>& cost, bool bar_artificials) {
    const std::size_t limit = 5000 + 200 * (m_ + ncols_);
    std::vector<T> cb(m_);
    for (std::size_t iter = 0; iter < limit; ++iter) {
      for (std::size_t i = 0; i < m_; ++i) cb[i] = cost[basis_[i]];

      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (in_basis_[j]) continue;
        if (bar_artificials && j >= art_col_[0]) break;
        T reduced = cost[j];
        for (std::size_t i = 0; i < m_; ++i) reduced -= cb[i] * tab_[i][j];
        if (reduced < -entering_eps()) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;

      std::size_t leave = SIZE_MAX;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!(tab_[i][enter] > pivot_eps_)) continue;
        if (leave == SIZE_MAX) {
          leave = i;
          continue;
        }
        const T lhs = tab_[i][ncols_] * tab_[leave][enter];
        const T rhs = tab_[leave][ncols_] * tab_[i][enter];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter);
    }
    throw Error::numerical("simplex iteration limit exceeded");
  }

  void pivot(std::size_t r, std::size_t s) {
    const T inv = T(1) / tab_[r][s];
    for (std::size_t j = 0; j <= ncols_; ++j) tab_[r][j] *= inv;
    tab_[r][s] = T(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const T factor = tab_[i][s];
      if (factor == T(0)) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) {
        tab_[i][j] -= factor * tab_[r][j];
      }
      tab_[i][s] = T(0);
    }
    in_basis_[basis_[r]] = false;
    basis_[r] = s;
    in_basis_[s] = true;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_col_[0]) continue;
      std::size_t s = SIZE_MAX;
      for (std::size_t j = 0; j < art_col_[0]; ++j) {
        if (!in_basis_[j] && abs_value<T>(tab_[i][j]) > pivot_eps_) {
          s = j;
          break;
        }
      }
      // A row with no eligible column is redundant; its artificial stays
      // basic at level ~0 and is barred from moving in phase 2.
      if (s != SIZE_MAX) pivot(i, s);
    }
  }

  T entering_eps() const {
    if constexpr (ScalarTraits<T>::mode == ScalarMode::Float64) {
      return 1e-11;
    } else {
      return T(0);
    }
  }

  const LpProblem<T>& p_;
  T tol_;
  T pivot_eps_;
  std::size_t m_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::size_t> pos_col_, neg_col_, slack_col_, art_col_, basis_;
  std::vector<bool> flip_, in_basis_;
  std::vector<std::vector<T>> tab_;
};

}  // namespace detail

template <class T>
LpOutcome<T> solve(const LpProblem<T>& p, const T& tol) {
  p.validate();
  detail::SimplexTableau<T> tableau(p, tol);
  LpOutcome<T> out = tableau.run();
  if (out.status == LpStatus::Infeasible && !verify_farkas(p, out.farkas, tol)) {
    throw Error::numerical("infeasibility certificate failed recheck");
  }
  return out;
}

}  // namespace infsup
