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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infsup/instance.hpp"
#include "infsup/konig.hpp"

namespace infsup {

enum class CertificateKind { FritzJohn, Kkt };

/// Normalized multiplier pair (rho, phi) with rho + sum(phi) = 1 witnessing
/// that the weighted Lagrangian rho*f + phi.G attains its sampled minimum at
/// x0 with complementary slackness phi.G(., x0) = 0. Residuals are recomputed
/// by direct arithmetic before the certificate is returned. When kind = Kkt,
/// rho > 0 and kkt_multiplier = phi / rho is the unnormalized Lagrange
/// multiplier.
template <class T>
struct MultiplierCertificate {
  T rho{};
  std::vector<T> phi;
  bool normalized = true;
  CertificateKind kind = CertificateKind::FritzJohn;
  T lagrangian_min_residual{};  // -min_x [rho (f(x)-f(x0)) + phi.G(.,x)]
  T complementarity_residual{};  // |phi . G(., x0)|
  std::vector<T> kkt_multiplier;  // phi / rho, only when kind = Kkt
};

template <class T>
struct SlaterReport {
  bool strong_holds = false;
  std::optional<std::size_t> strong_witness_index;
  T strong_margin{};  // min over columns of max over rows; negative iff holds
  bool weak_holds = false;
  std::optional<std::size_t> weak_witness_index;
};

template <class T>
struct SaddleReport {
  bool left_ok = false;   // x0 feasible and complementarity at x0
  bool right_ok = false;  // L(x0, phi) <= L(x, phi) for all sampled x
  T worst_violation{};

  bool is_saddle() const { return left_ok && right_ok; }
};

template <class T>
struct FritzJohnResult {
  std::optional<MultiplierCertificate<T>> certificate;
  std::optional<ConvexityWitness<T>> witness;
  T v_pure{};   // of the combined family; the lemma value
  T v_mixed{};  // certificate exists iff this is >= -tol

  bool has_certificate() const { return certificate.has_value(); }
};

/// min over sampled x of max{ max_row G(., x), f(x) - f(x0) } together with
/// the attaining column. Equals zero whenever x0 is feasible-optimal on the
/// sample; a negative value flags a better feasible point than x0.
template <class T>
std::pair<T, std::size_t> lemma_value(const ProgramInstance& inst) {
  const Matrix<T> family = combined_family<T>(inst);
  std::size_t col = 0;
  T value = pure_minimax_value(family, &col);
  return {std::move(value), col};
}

/// Strong form: some sampled point has max over rows < -tol (margin is that
/// max, minimized over points). Weak form: some sampled point has every row
/// < -tol individually. On a finite row set the two coincide; both are
/// reported because they diverge on the infinite index sets the sample
/// stands in for.
template <class T>
SlaterReport<T> slater_check(const ProgramInstance& inst, const T& tol) {
  const Matrix<T> g = matrix_from_rational<T>(inst.constraints);
  SlaterReport<T> report;
  report.strong_margin = g.column_max(0);
  std::size_t best = 0;
  for (std::size_t j = 1; j < g.cols(); ++j) {
    const T v = g.column_max(j);
    if (v < report.strong_margin) {
      report.strong_margin = v;
      best = j;
    }
  }
  if (report.strong_margin < -tol) {
    report.strong_holds = true;
    report.strong_witness_index = best;
  }
  for (std::size_t j = 0; j < g.cols() && !report.weak_holds; ++j) {
    bool all_negative = true;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      all_negative = all_negative && g.at(i, j) < -tol;
    }
    if (all_negative) {
      report.weak_holds = true;
      report.weak_witness_index = j;
    }
  }
  return report;
}

/// f(x) + phi . G(., x) at a sampled point.
template <class T>
T lagrangian_value(const ProgramInstance& inst, std::size_t x_index,
                   const std::vector<T>& phi) {
  if (x_index >= inst.num_points()) {
    throw Error::invalid("x index " + std::to_string(x_index) + " out of range");
  }
  if (phi.size() != inst.num_rows()) {
    throw Error::invalid("phi has length " + std::to_string(phi.size()) +
                         ", expected " + std::to_string(inst.num_rows()));
  }
  T acc = ScalarTraits<T>::from_rational(inst.objective[x_index]);
  for (std::size_t i = 0; i < inst.num_rows(); ++i) {
    if (phi[i] < T(0)) throw Error::invalid("phi has a negative entry");
    acc += phi[i] * ScalarTraits<T>::from_rational(inst.constraints.at(i, x_index));
  }
  return acc;
}

/// Saddle test for (x0, phi). The right inequality is scanned over the
/// sample; the left one reduces to feasibility of x0 plus complementarity,
/// which together control every positive functional representable on the
/// sampled rows.
template <class T>
SaddleReport<T> check_saddle(const ProgramInstance& inst, const std::vector<T>& phi,
                             const T& tol) {
  if (!inst.x0_index) throw Error::invalid("x0_index is not set");
  if (phi.size() != inst.num_rows()) {
    throw Error::invalid("phi has length " + std::to_string(phi.size()) +
                         ", expected " + std::to_string(inst.num_rows()));
  }
  for (const T& v : phi) {
    if (v < T(0)) throw Error::invalid("phi has a negative entry");
  }
  const Matrix<T> g = matrix_from_rational<T>(inst.constraints);
  const std::size_t x0 = *inst.x0_index;

  const T feasibility = g.column_max(x0);
  T complementarity(0);
  for (std::size_t i = 0; i < g.rows(); ++i) complementarity += phi[i] * g.at(i, x0);
  complementarity = abs_value<T>(complementarity);

  const T at_x0 = lagrangian_value<T>(inst, x0, phi);
  T right_violation = at_x0 - lagrangian_value<T>(inst, 0, phi);
  for (std::size_t j = 1; j < inst.num_points(); ++j) {
    const T v = at_x0 - lagrangian_value<T>(inst, j, phi);
    if (v > right_violation) right_violation = v;
  }

  SaddleReport<T> report;
  report.left_ok = !(feasibility > tol) && !(complementarity > tol);
  report.right_ok = !(right_violation > tol);
  report.worst_violation = std::max({T(0), feasibility, complementarity, right_violation});
  return report;
}

namespace detail {

template <class T>
void require_feasible_optimal(const ProgramInstance& inst, const T& tol) {
  if (!inst.x0_index) throw Error::invalid("x0_index is not set");
  const T gap = assert_optimal<T>(inst, tol);  // throws if x0 is infeasible
  if (gap > tol) {
    throw Error::invalid("x0 (" + inst.x_labels[*inst.x0_index] +
                         ") is not sample-optimal: a feasible sampled point "
                         "improves the objective");
  }
}

}  // namespace detail

/// Runs the column-mixture game on the combined family. A nonnegative game
/// value yields the normalized multiplier pair read off the game's dual
/// (objective-row weight is rho); a negative value yields the witness
/// mixture, which rules out every multiplier pair over this sample.
template <class T>
FritzJohnResult<T> fritz_john(const ProgramInstance& inst, const T& tol) {
  detail::require_feasible_optimal<T>(inst, tol);
  const Matrix<T> family = combined_family<T>(inst);
  const std::size_t l = inst.num_rows();

  const MinimaxReport<T> game = minimax(family, tol);
  FritzJohnResult<T> result;
  result.v_pure = game.v_pure;
  result.v_mixed = game.v_mixed;

  if (game.v_mixed < -tol) {
    result.witness = detail::extract_witness(family, game.mu, game.v_pure);
    if (!(result.witness->gap > tol)) {
      throw Error::numerical("witness gap collapsed under recomputation");
    }
    return result;
  }

  MultiplierCertificate<T> cert;
  cert.phi.assign(game.phi.weights.begin(), game.phi.weights.begin() + l);
  cert.rho = game.phi.weights[l];
  cert.normalized = true;
  cert.kind = CertificateKind::FritzJohn;

  // Recompute both Fritz John conditions directly from the instance data.
  const std::vector<T> lagrangian = family.row_mixture_times(game.phi.weights);
  T lag_min = lagrangian[0];
  for (const T& v : lagrangian) {
    if (v < lag_min) lag_min = v;
  }
  cert.lagrangian_min_residual = T(-lag_min);
  T comp(0);
  for (std::size_t i = 0; i < l; ++i) {
    comp += cert.phi[i] * ScalarTraits<T>::from_rational(
                              inst.constraints.at(i, *inst.x0_index));
  }
  cert.complementarity_residual = abs_value<T>(comp);
  if (cert.lagrangian_min_residual > tol || cert.complementarity_residual > tol) {
    throw Error::numerical("multiplier certificate failed recheck");
  }
  result.certificate = std::move(cert);
  return result;
}

/// Fritz John under the strong Slater condition, which forces rho > 0 so the
/// pair rescales to a genuine Lagrange/KKT multiplier phi / rho.
template <class T>
FritzJohnResult<T> kkt(const ProgramInstance& inst, const T& tol) {
  detail::require_feasible_optimal<T>(inst, tol);
  const SlaterReport<T> slater = slater_check<T>(inst, tol);
  if (!slater.strong_holds) {
    throw Error::invalid(
        "Slater condition fails on the sample: no point has all constraints "
        "strictly negative");
  }

  FritzJohnResult<T> result = fritz_john<T>(inst, tol);
  if (!result.certificate) return result;

  MultiplierCertificate<T>& cert = *result.certificate;
  if (!(cert.rho > tol)) {
    throw Error::numerical(
        "rho vanished despite the Slater condition; certificate is unusable");
  }
  cert.kind = CertificateKind::Kkt;
  cert.kkt_multiplier.reserve(cert.phi.size());
  for (const T& v : cert.phi) cert.kkt_multiplier.push_back(T(v / cert.rho));
  return result;
}

template <class T>
struct StudyRow {
  std::size_t n_trunc = 0;
  SlaterReport<T> slater;
  T v_pure{};
  T v_mixed{};
  ConvexityKind verdict = ConvexityKind::Witness;
  std::optional<ConvexityWitness<T>> witness;
};

/// Reproduces the counterexample trend on a fixed grid while the truncation
/// depth grows: the strong Slater margin stays negative (it only vanishes in
/// the limit), every truncation admits a witness mixture, and the mixed game
/// value is negative and nondecreasing in the depth, since deeper
/// truncations only add rows to the adversary's family.
template <class T>
std::vector<StudyRow<T>> truncation_study(std::vector<std::size_t> n_list,
                                          const std::vector<Rational>& grid,
                                          const T& tol) {
  if (n_list.empty()) throw Error::invalid("no truncation depths given");
  bool has_zero = false, has_negative = false, has_above_one = false;
  Rational best_pair_bound;  // smallest |a| over negative grid points a
  bool first_negative = true;
  Rational largest(0);
  for (const Rational& q : grid) {
    has_zero = has_zero || q == 0;
    if (q < 0) {
      has_negative = true;
      if (first_negative || -q < best_pair_bound) best_pair_bound = -q;
      first_negative = false;
    }
    has_above_one = has_above_one || q > 1;
    if (q > largest) largest = q;
  }
  if (!has_zero) throw Error::invalid("grid must contain the point 0");
  if (!has_negative) throw Error::invalid("grid must contain a negative point");
  if (!has_above_one) throw Error::invalid("grid must contain a point > 1");
  if (!(largest > best_pair_bound)) {
    throw Error::invalid(
        "grid admits no witness mixture: it needs points a < 0 < b with b > -a");
  }

  std::sort(n_list.begin(), n_list.end());
  std::vector<StudyRow<T>> rows;
  rows.reserve(n_list.size());
  for (std::size_t n : n_list) {
    const ProgramInstance inst =
        generate_cubic_counterexample(n, grid, ScalarTraits<T>::mode);
    StudyRow<T> row;
    row.n_trunc = n;
    row.slater = slater_check<T>(inst, tol);
    const ConvexityVerdict<T> verdict =
        check_infsup_convexity(combined_family<T>(inst), tol);
    row.v_pure = verdict.v_pure;
    row.v_mixed = verdict.v_mixed;
    row.verdict = verdict.kind;
    row.witness = verdict.witness;
    rows.push_back(std::move(row));
  }

  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].verdict != ConvexityKind::Witness) {
      throw Error::numerical("truncation " + std::to_string(rows[k].n_trunc) +
                             " produced no witness; trend assertion failed");
    }
    if (k > 0 && rows[k].v_mixed < rows[k - 1].v_mixed - tol) {
      throw Error::numerical("mixed value decreased with truncation depth; "
                             "trend assertion failed");
    }
  }
  return rows;
}

}  // namespace infsup
