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

#include "infsup/report.hpp"

#include <cstdint>
#include <utility>

#include "infsup/error.hpp"
#include "infsup/konig.hpp"
#include "infsup/multipliers.hpp"

namespace infsup {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Float values are JSON numbers (shortest round-trip form); rational values
// are exact strings, decimal where a finite decimal exists and "p/q"
// otherwise, so nothing is ever rounded.
ordered_json render(double v) { return v; }
ordered_json render(const Rational& v) { return rational_to_decimal(v); }

template <class T>
ordered_json render_vec(const std::vector<T>& values) {
  ordered_json arr = ordered_json::array();
  for (const T& v : values) arr.push_back(render(v));
  return arr;
}

template <class T>
T value_from_json(const json& v) {
  if constexpr (ScalarTraits<T>::mode == ScalarMode::Float64) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return rational_to_double(rational_from_string(v.get<std::string>()));
  } else {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Rational(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_float()) {
      Rational q;
      mpq_set_d(q.get_mpq_t(), v.get<double>());
      return q;
    }
  }
  throw Error::invalid("report field is not a number");
}

template <class T>
std::vector<T> vector_from_json(const json& v) {
  if (!v.is_array()) throw Error::invalid("report field is not an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (const json& item : v) out.push_back(value_from_json<T>(item));
  return out;
}

ordered_json make_envelope(std::string_view command, std::string_view verdict,
                           ScalarMode mode, const Rational& tol) {
  ordered_json doc;
  doc["command"] = std::string(command);
  doc["verdict"] = std::string(verdict);
  doc["tolerance"] = mode == ScalarMode::Rational
                         ? ordered_json("0")
                         : ordered_json(rational_to_double(tol));
  doc["scalar_mode"] = std::string(scalar_mode_name(mode));
  doc["sample_restricted"] = true;
  return doc;
}

template <class T>
ordered_json witness_json(const ConvexityWitness<T>& w,
                          const std::vector<std::string>* labels) {
  ordered_json out;
  out["support"] = w.support;
  if (labels) {
    std::vector<std::string> names;
    for (std::size_t j : w.support) names.push_back((*labels)[j]);
    out["support_labels"] = names;
  }
  out["weights"] = render_vec(w.weights.weights);
  out["lhs"] = render(w.lhs);
  out["rhs"] = render(w.rhs);
  out["gap"] = render(w.gap);
  return out;
}

template <class F>
OpResult dispatch_mode(ScalarMode mode, F&& f) {
  if (mode == ScalarMode::Rational) return f(Rational(0));
  return f(double(0));
}

template <class T>
ordered_json minimax_payload(const Matrix<T>& a, const MinimaxReport<T>& game) {
  ordered_json payload;
  payload["rows"] = a.rows();
  payload["cols"] = a.cols();
  payload["v_pure"] = render(game.v_pure);
  payload["pure_column"] = game.pure_col;
  payload["v_mixed"] = render(game.v_mixed);
  payload["mu"] = render_vec(game.mu.weights);
  payload["phi"] = render_vec(game.phi.weights);
  payload["equal"] = game.equal;
  return payload;
}

}  // namespace

OpResult op_minimax(const Matrix<Rational>& a, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    const Matrix<T> m = matrix_from_rational<T>(a);
    const MinimaxReport<T> game = minimax(m, tol);
    OpResult result;
    result.report = make_envelope("minimax", "value", options.mode, options.tol);
    result.report["payload"] = minimax_payload(m, game);
    return result;
  });
}

OpResult op_convexity(const Matrix<Rational>& a, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    const Matrix<T> m = matrix_from_rational<T>(a);
    const ConvexityVerdict<T> verdict = check_infsup_convexity(m, tol);
    const bool witness = verdict.kind == ConvexityKind::Witness;
    OpResult result;
    result.negative_verdict = witness;
    result.report = make_envelope("convexity", witness ? "witness" : "convex",
                                  options.mode, options.tol);
    ordered_json payload;
    payload["v_pure"] = render(verdict.v_pure);
    payload["v_mixed"] = render(verdict.v_mixed);
    if (witness) payload["witness"] = witness_json(*verdict.witness, nullptr);
    result.report["payload"] = std::move(payload);
    return result;
  });
}

OpResult op_mazur_orlicz(const Matrix<Rational>& a, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    const Matrix<T> m = matrix_from_rational<T>(a);
    std::vector<std::vector<T>> points(m.cols(), std::vector<T>(m.rows()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (std::size_t i = 0; i < m.rows(); ++i) points[j][i] = m.at(i, j);
    }
    const MazurOrliczResult<T> res = mazur_orlicz_functional(points, tol);
    OpResult result;
    result.report = make_envelope("mazur-orlicz", "value", options.mode, options.tol);
    ordered_json payload;
    payload["dimension"] = m.rows();
    payload["points"] = m.cols();
    payload["phi"] = render_vec(res.phi.weights);
    payload["value"] = render(res.value);
    result.report["payload"] = std::move(payload);
    return result;
  });
}

OpResult op_konig(const ProgramInstance& inst, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    const std::vector<T> f = vector_from_rational<T>(inst.objective);
    const Matrix<T> g = matrix_from_rational<T>(inst.constraints);
    const T alpha = ScalarTraits<T>::from_rational(options.alpha);
    const KonigResult<T> res = konig_functional(f, g, alpha, tol);
    OpResult result;
    result.negative_verdict = !res.has_functional();
    result.report = make_envelope(
        "konig", res.has_functional() ? "certificate" : "witness", options.mode,
        options.tol);
    ordered_json payload;
    payload["alpha"] = render(alpha);
    payload["v_mixed_shifted"] = render(res.v_mixed_shifted);
    if (res.has_functional()) {
      payload["phi"] = render_vec(res.phi->weights);
      payload["lambda_labels"] = inst.lambda_labels;
    } else {
      payload["witness"] = witness_json(*res.witness, &inst.x_labels);
    }
    result.report["payload"] = std::move(payload);
    return result;
  });
}

namespace {

template <class T>
ordered_json certificate_json(const MultiplierCertificate<T>& cert,
                              const std::vector<std::string>& lambda_labels) {
  ordered_json out;
  out["kind"] = cert.kind == CertificateKind::Kkt ? "kkt" : "fritz-john";
  out["rho"] = render(cert.rho);
  out["phi"] = render_vec(cert.phi);
  out["lambda_labels"] = lambda_labels;
  out["normalized"] = cert.normalized;
  out["lagrangian_min_residual"] = render(cert.lagrangian_min_residual);
  out["complementarity_residual"] = render(cert.complementarity_residual);
  if (cert.kind == CertificateKind::Kkt) {
    out["kkt_multiplier"] = render_vec(cert.kkt_multiplier);
  }
  return out;
}

template <class T>
OpResult multiplier_result(const char* command, const ProgramInstance& inst,
                           const FritzJohnResult<T>& res, const OpOptions& options) {
  OpResult result;
  result.negative_verdict = !res.has_certificate();
  result.report = make_envelope(
      command, res.has_certificate() ? "certificate" : "witness", options.mode,
      options.tol);
  ordered_json payload;
  payload["x0_index"] = *inst.x0_index;
  payload["x0_label"] = inst.x_labels[*inst.x0_index];
  payload["lemma_value"] = render(res.v_pure);
  payload["v_mixed"] = render(res.v_mixed);
  if (res.has_certificate()) {
    payload["certificate"] = certificate_json(*res.certificate, inst.lambda_labels);
  } else {
    payload["witness"] = witness_json(*res.witness, &inst.x_labels);
  }
  result.report["payload"] = std::move(payload);
  return result;
}

}  // namespace

OpResult op_fritz_john(const ProgramInstance& inst, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    return multiplier_result("fritz-john", inst, fritz_john<T>(inst, tol), options);
  });
}

OpResult op_kkt(const ProgramInstance& inst, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    return multiplier_result("kkt", inst, kkt<T>(inst, tol), options);
  });
}

OpResult op_slater(const ProgramInstance& inst, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    const SlaterReport<T> report = slater_check<T>(inst, tol);
    OpResult result;
    result.negative_verdict = !report.strong_holds;
    result.report = make_envelope("slater", report.strong_holds ? "holds" : "fails",
                                  options.mode, options.tol);
    ordered_json payload;
    payload["strong_holds"] = report.strong_holds;
    payload["strong_margin"] = render(report.strong_margin);
    if (report.strong_witness_index) {
      payload["strong_witness_index"] = *report.strong_witness_index;
      payload["strong_witness_label"] = inst.x_labels[*report.strong_witness_index];
    }
    payload["weak_holds"] = report.weak_holds;
    if (report.weak_witness_index) {
      payload["weak_witness_index"] = *report.weak_witness_index;
      payload["weak_witness_label"] = inst.x_labels[*report.weak_witness_index];
    }
    result.report["payload"] = std::move(payload);
    return result;
  });
}

OpResult op_saddle(const ProgramInstance& inst, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    std::vector<T> phi;
    phi.reserve(options.phi.size());
    for (const Rational& q : options.phi) {
      phi.push_back(ScalarTraits<T>::from_rational(q));
    }
    const SaddleReport<T> report = check_saddle<T>(inst, phi, tol);
    OpResult result;
    result.negative_verdict = !report.is_saddle();
    result.report = make_envelope("saddle", report.is_saddle() ? "holds" : "fails",
                                  options.mode, options.tol);
    ordered_json payload;
    payload["phi"] = render_vec(phi);
    payload["x0_index"] = *inst.x0_index;
    payload["left_ok"] = report.left_ok;
    payload["right_ok"] = report.right_ok;
    payload["is_saddle"] = report.is_saddle();
    payload["worst_violation"] = render(report.worst_violation);
    result.report["payload"] = std::move(payload);
    return result;
  });
}

OpResult op_study(const std::vector<Rational>& grid, const OpOptions& options) {
  return dispatch_mode(options.mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(options.tol);
    if (options.n_list.empty()) throw Error::invalid("no truncation depths given");
    const std::vector<StudyRow<T>> rows =
        truncation_study<T>(options.n_list, grid, tol);
    OpResult result;
    result.report = make_envelope("study", "value", options.mode, options.tol);
    ordered_json payload;
    ordered_json grid_json = ordered_json::array();
    for (const Rational& q : grid) grid_json.push_back(rational_to_decimal(q));
    payload["grid"] = std::move(grid_json);
    payload["rows"] = ordered_json::array();
    for (const StudyRow<T>& row : rows) {
      ordered_json rj;
      rj["n"] = row.n_trunc;
      rj["strong_slater_holds"] = row.slater.strong_holds;
      rj["strong_slater_margin"] = render(row.slater.strong_margin);
      rj["weak_slater_holds"] = row.slater.weak_holds;
      rj["v_pure"] = render(row.v_pure);
      rj["v_mixed"] = render(row.v_mixed);
      rj["verdict"] =
          row.verdict == ConvexityKind::Witness ? "witness" : "convex";
      if (row.witness) rj["witness"] = witness_json(*row.witness, nullptr);
      payload["rows"].push_back(std::move(rj));
    }
    result.report["payload"] = std::move(payload);
    return result;
  });
}

// ---------------------------------------------------------------------------
// verify: arithmetic-only re-check of an emitted report.
// ---------------------------------------------------------------------------

namespace {

struct CheckList {
  ordered_json checks = ordered_json::array();
  bool all_ok = true;

  void add(const std::string& name, bool ok, std::string detail = {}) {
    ordered_json c;
    c["name"] = name;
    c["ok"] = ok;
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    all_ok = all_ok && ok;
  }
};

template <class T>
bool simplex_ok(const std::vector<T>& w, const T& tol) {
  if (w.empty()) return false;
  T sum(0);
  for (const T& v : w) {
    if (v < -tol) return false;
    sum += v;
  }
  if constexpr (ScalarTraits<T>::mode == ScalarMode::Rational) {
    return sum == T(1);
  } else {
    return abs_value<T>(sum - T(1)) <= 1e-9;
  }
}

// Witness re-check: weights live on the simplex, the reported rhs matches a
// direct recomputation over the support, lhs matches the pure scan, and the
// recomputed gap clears the tolerance.
template <class T>
void verify_witness(const json& w, const Matrix<T>& family, const T& tol,
                    CheckList& checks) {
  const std::vector<std::size_t> support =
      w.at("support").get<std::vector<std::size_t>>();
  const std::vector<T> weights = vector_from_json<T>(w.at("weights"));
  bool support_ok = !support.empty() && support.size() == weights.size();
  for (std::size_t j : support) support_ok = support_ok && j < family.cols();
  checks.add("witness support indices valid", support_ok);
  if (!support_ok) return;
  checks.add("witness weights on the simplex", simplex_ok(weights, tol));

  T rhs{};
  for (std::size_t i = 0; i < family.rows(); ++i) {
    T acc(0);
    for (std::size_t k = 0; k < support.size(); ++k) {
      acc += weights[k] * family.at(i, support[k]);
    }
    if (i == 0 || acc > rhs) rhs = acc;
  }
  const T lhs = pure_minimax_value(family);
  const T slack = tol + tol;
  checks.add("witness rhs matches recomputation",
             abs_value<T>(rhs - value_from_json<T>(w.at("rhs"))) <= slack);
  checks.add("witness lhs equals pure infsup value",
             abs_value<T>(lhs - value_from_json<T>(w.at("lhs"))) <= slack);
  checks.add("witness gap positive beyond tolerance", lhs - rhs > tol);
}

template <class T>
void verify_minimax(const json& payload, const Matrix<T>& a, const T& tol,
                    CheckList& checks) {
  const std::vector<T> mu = vector_from_json<T>(payload.at("mu"));
  const std::vector<T> phi = vector_from_json<T>(payload.at("phi"));
  const T v_mixed = value_from_json<T>(payload.at("v_mixed"));
  const T v_pure = value_from_json<T>(payload.at("v_pure"));
  checks.add("mu on the simplex", mu.size() == a.cols() && simplex_ok(mu, tol));
  checks.add("phi on the simplex", phi.size() == a.rows() && simplex_ok(phi, tol));
  if (!checks.all_ok) return;

  const std::vector<T> row_values = a.times_column_mixture(mu);
  T primal = row_values[0];
  for (const T& v : row_values) {
    if (v > primal) primal = v;
  }
  const std::vector<T> col_values = a.row_mixture_times(phi);
  T dual = col_values[0];
  for (const T& v : col_values) {
    if (v < dual) dual = v;
  }
  const T slack = tol + tol;
  checks.add("mu attains v_mixed", abs_value<T>(primal - v_mixed) <= slack);
  checks.add("phi certifies v_mixed", abs_value<T>(dual - v_mixed) <= slack);
  checks.add("v_pure matches pure scan",
             abs_value<T>(pure_minimax_value(a) - v_pure) <= slack);
}

template <class T>
void verify_certificate(const json& payload, const ProgramInstance& inst,
                        bool expect_kkt, const T& tol, CheckList& checks) {
  const json& cert = payload.at("certificate");
  const T rho = value_from_json<T>(cert.at("rho"));
  const std::vector<T> phi = vector_from_json<T>(cert.at("phi"));
  if (phi.size() != inst.num_rows() || !inst.x0_index) {
    checks.add("certificate shape matches instance", false);
    return;
  }
  bool nonneg = !(rho < T(0) - tol);
  T total = rho;
  for (const T& v : phi) {
    nonneg = nonneg && !(v < T(0) - tol);
    total += v;
  }
  checks.add("multipliers nonnegative", nonneg);
  if constexpr (ScalarTraits<T>::mode == ScalarMode::Rational) {
    checks.add("normalization rho + sum(phi) = 1", total == T(1));
  } else {
    checks.add("normalization rho + sum(phi) = 1", abs_value<T>(total - T(1)) <= 1e-9);
  }

  const Matrix<T> g = matrix_from_rational<T>(inst.constraints);
  const std::vector<T> f = vector_from_rational<T>(inst.objective);
  const std::size_t x0 = *inst.x0_index;
  T lag_min{};
  for (std::size_t j = 0; j < inst.num_points(); ++j) {
    T acc = rho * T(f[j] - f[x0]);
    for (std::size_t i = 0; i < inst.num_rows(); ++i) acc += phi[i] * g.at(i, j);
    if (j == 0 || acc < lag_min) lag_min = acc;
  }
  checks.add("weighted Lagrangian minimized at x0", !(T(-lag_min) > tol));
  T comp(0);
  for (std::size_t i = 0; i < inst.num_rows(); ++i) comp += phi[i] * g.at(i, x0);
  checks.add("complementary slackness at x0", !(abs_value<T>(comp) > tol));

  if (expect_kkt) {
    checks.add("rho strictly positive", rho > tol);
    if (rho > tol) {
      const std::vector<T> multiplier = vector_from_json<T>(cert.at("kkt_multiplier"));
      bool quotient_ok = multiplier.size() == phi.size();
      for (std::size_t i = 0; quotient_ok && i < phi.size(); ++i) {
        quotient_ok = abs_value<T>(multiplier[i] * rho - phi[i]) <= tol;
      }
      checks.add("kkt multiplier equals phi / rho", quotient_ok);
      const SaddleReport<T> saddle = check_saddle<T>(inst, multiplier, tol);
      checks.add("kkt multiplier forms a saddle with x0", saddle.is_saddle());
    }
  }
}

template <class T>
void verify_by_command(const std::string& command, const json& payload,
                       const ProgramInstance* inst, const Matrix<Rational>* mat,
                       const T& tol, CheckList& checks) {
  const auto need_instance = [&]() -> const ProgramInstance& {
    if (!inst) throw Error::invalid("verify of '" + command + "' needs the instance input");
    return *inst;
  };
  const auto need_matrix = [&]() -> Matrix<T> {
    if (!mat) throw Error::invalid("verify of '" + command + "' needs the matrix input");
    return matrix_from_rational<T>(*mat);
  };

  if (command == "minimax") {
    verify_minimax(payload, need_matrix(), tol, checks);
  } else if (command == "convexity") {
    const Matrix<T> a = need_matrix();
    if (payload.contains("witness")) {
      verify_witness(payload.at("witness"), a, tol, checks);
    } else {
      const T slack = tol + tol;
      checks.add("v_pure matches pure scan",
                 abs_value<T>(pure_minimax_value(a) -
                              value_from_json<T>(payload.at("v_pure"))) <= slack);
      checks.add("convexity verdict is LP-backed; nothing further to recheck", true);
    }
  } else if (command == "mazur-orlicz") {
    const Matrix<T> a = need_matrix();
    const std::vector<T> phi = vector_from_json<T>(payload.at("phi"));
    const T value = value_from_json<T>(payload.at("value"));
    checks.add("phi on the simplex", phi.size() == a.rows() && simplex_ok(phi, tol));
    if (checks.all_ok) {
      const std::vector<T> col_values = a.row_mixture_times(phi);
      T dual = col_values[0];
      for (const T& v : col_values) {
        if (v < dual) dual = v;
      }
      const T slack = tol + tol;
      checks.add("phi attains the reported value on the hull",
                 abs_value<T>(dual - value) <= slack);
      checks.add("value below pure coordinate-max minimum",
                 !(value > pure_minimax_value(a) + slack));
    }
  } else if (command == "konig") {
    const ProgramInstance& pi = need_instance();
    const Matrix<T> g = matrix_from_rational<T>(pi.constraints);
    const std::vector<T> f = vector_from_rational<T>(pi.objective);
    const T alpha = value_from_json<T>(payload.at("alpha"));
    if (payload.contains("witness")) {
      Matrix<T> family(g.rows(), g.cols());
      for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
          family.at(i, j) = T(g.at(i, j) - f[j]);
        }
      }
      verify_witness(payload.at("witness"), family, tol, checks);
    } else {
      const std::vector<T> phi = vector_from_json<T>(payload.at("phi"));
      checks.add("phi on the simplex", phi.size() == g.rows() && simplex_ok(phi, tol));
      if (checks.all_ok) {
        const std::vector<T> values = g.row_mixture_times(phi);
        bool dominated = true;
        for (std::size_t j = 0; j < g.cols(); ++j) {
          dominated = dominated && !(values[j] < T(f[j] + alpha - tol));
        }
        checks.add("f + alpha dominated by phi . G at every sampled point", dominated);
      }
    }
  } else if (command == "fritz-john" || command == "kkt") {
    const ProgramInstance& pi = need_instance();
    if (payload.contains("witness")) {
      verify_witness(payload.at("witness"), combined_family<T>(pi), tol, checks);
    } else {
      verify_certificate(payload, pi, command == "kkt", tol, checks);
    }
  } else if (command == "slater") {
    const ProgramInstance& pi = need_instance();
    const SlaterReport<T> fresh = slater_check<T>(pi, tol);
    checks.add("strong verdict matches recomputation",
               fresh.strong_holds == payload.at("strong_holds").get<bool>());
    checks.add("weak verdict matches recomputation",
               fresh.weak_holds == payload.at("weak_holds").get<bool>());
    checks.add("strong margin matches recomputation",
               abs_value<T>(fresh.strong_margin -
                            value_from_json<T>(payload.at("strong_margin"))) <=
                   tol + tol);
  } else if (command == "saddle") {
    const ProgramInstance& pi = need_instance();
    const std::vector<T> phi = vector_from_json<T>(payload.at("phi"));
    const SaddleReport<T> fresh = check_saddle<T>(pi, phi, tol);
    checks.add("left inequality matches recomputation",
               fresh.left_ok == payload.at("left_ok").get<bool>());
    checks.add("right inequality matches recomputation",
               fresh.right_ok == payload.at("right_ok").get<bool>());
  } else if (command == "study") {
    const std::vector<Rational> grid = [&] {
      std::vector<Rational> g;
      for (const json& cell : payload.at("grid")) {
        g.push_back(rational_from_string(cell.get<std::string>()));
      }
      return g;
    }();
    T previous{};
    bool first = true;
    for (const json& row : payload.at("rows")) {
      const std::size_t n = row.at("n").get<std::size_t>();
      const ProgramInstance inst_n =
          generate_cubic_counterexample(n, grid, ScalarTraits<T>::mode);
      const std::string tag = "n=" + std::to_string(n) + ": ";
      const SlaterReport<T> fresh = slater_check<T>(inst_n, tol);
      checks.add(tag + "slater matches recomputation",
                 fresh.strong_holds == row.at("strong_slater_holds").get<bool>());
      const T v_mixed = value_from_json<T>(row.at("v_mixed"));
      checks.add(tag + "mixed value negative", v_mixed < T(0));
      if (!first) {
        checks.add(tag + "mixed value nondecreasing", !(v_mixed < previous - tol));
      }
      previous = v_mixed;
      first = false;
      if (row.contains("witness")) {
        verify_witness(row.at("witness"), combined_family<T>(inst_n), tol, checks);
      } else {
        checks.add(tag + "witness present", false);
      }
    }
  } else {
    throw Error::invalid("cannot verify reports of command '" + command + "'");
  }
}

}  // namespace

OpResult op_verify(const ProgramInstance* inst, const Matrix<Rational>* mat,
                   const std::string& report_text, const OpOptions& options) {
  json report;
  try {
    report = json::parse(report_text);
  } catch (const json::exception& e) {
    throw Error::invalid(std::string("malformed report JSON: ") + e.what());
  }
  if (!report.is_object() || !report.contains("command") ||
      !report.contains("payload") || !report.contains("scalar_mode")) {
    throw Error::invalid("report is missing command/scalar_mode/payload fields");
  }
  const std::string command = report.at("command").get<std::string>();
  const ScalarMode mode =
      scalar_mode_from_name(report.at("scalar_mode").get<std::string>());

  OpOptions local = options;
  local.mode = mode;
  return dispatch_mode(mode, [&](auto zero) {
    using T = decltype(zero);
    const T tol = ScalarTraits<T>::tolerance(local.tol);
    CheckList checks;
    verify_by_command<T>(command, report.at("payload"), inst, mat, tol, checks);
    OpResult result;
    result.negative_verdict = !checks.all_ok;
    result.report =
        make_envelope("verify", checks.all_ok ? "holds" : "fails", mode, local.tol);
    ordered_json payload;
    payload["checked_command"] = command;
    payload["holds"] = checks.all_ok;
    payload["checks"] = std::move(checks.checks);
    result.report["payload"] = std::move(payload);
    return result;
  });
}

}  // namespace infsup
