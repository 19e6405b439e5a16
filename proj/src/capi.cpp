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

#include "infsup.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "infsup/error.hpp"
#include "infsup/instance.hpp"
#include "infsup/report.hpp"

using namespace infsup;

struct isx_instance {
  ProgramInstance inst;
};

struct isx_matrix {
  Matrix<Rational> values;
  ScalarMode mode;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

isx_status fail(isx_status code, const char* message) {
  g_last_error = message;
  return code;
}

/// Runs the body, translating exceptions to status codes and recording the
/// message. Body must not touch out-params before it is certain to succeed.
template <class F>
isx_status guarded(F&& body) {
  try {
    body();
    return ISX_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return e.kind() == ErrorKind::Numerical ? ISX_NUMERICAL : ISX_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ISX_NUMERICAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISX_INVALID_INPUT;
  }
}

OpOptions base_options(ScalarMode mode, const char* tol) {
  OpOptions options;
  options.mode = mode;
  if (tol && *tol) options.tol = rational_from_string(tol);
  if (options.tol < 0) throw Error::invalid("tolerance must be nonnegative");
  return options;
}

template <class F>
isx_status run_guarded_op(char** report, int* verdict, F&& make) {
  if (!report) return fail(ISX_INVALID_INPUT, "report output pointer is null");
  *report = nullptr;
  return guarded([&] {
    OpResult result = make();
    *report = copy_string(result.dump());
    if (verdict) *verdict = result.negative_verdict ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* isx_version(void) { return "0.1.0"; }

const char* isx_last_error(void) { return g_last_error.c_str(); }

void isx_string_free(char* s) { delete[] s; }

isx_status isx_matrix_parse_csv(const char* text, int exact, isx_matrix** out) {
  if (!text || !out) return fail(ISX_INVALID_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto m = std::make_unique<isx_matrix>();
    m->values = parse_csv_matrix(text);
    m->mode = exact ? ScalarMode::Rational : ScalarMode::Float64;
    if (m->mode == ScalarMode::Float64) {
      for (std::size_t i = 0; i < m->values.rows(); ++i) {
        for (std::size_t j = 0; j < m->values.cols(); ++j) {
          if (!std::isfinite(rational_to_double(m->values.at(i, j)))) {
            throw Error::invalid("entry (" + std::to_string(i) + "," +
                                 std::to_string(j) +
                                 "): magnitude overflows float64");
          }
        }
      }
    }
    *out = m.release();
  });
}

void isx_matrix_free(isx_matrix* m) { delete m; }

isx_status isx_instance_parse_json(const char* text, int exact,
                                   isx_instance** out) {
  if (!text || !out) return fail(ISX_INVALID_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<isx_instance>();
    handle->inst = parse_instance(
        text, exact ? ScalarMode::Rational : ScalarMode::Float64);
    *out = handle.release();
  });
}

isx_status isx_instance_example(const char* name, const char* grid,
                                size_t n_trunc, int exact, isx_instance** out) {
  if (!name || !grid || !out) return fail(ISX_INVALID_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<isx_instance>();
    handle->inst = generate_example(
        name, n_trunc, parse_number_list(grid),
        exact ? ScalarMode::Rational : ScalarMode::Float64);
    *out = handle.release();
  });
}

isx_status isx_instance_to_json(const isx_instance* inst, char** out_json) {
  if (!inst || !out_json) return fail(ISX_INVALID_INPUT, "null argument");
  *out_json = nullptr;
  return guarded([&] { *out_json = copy_string(serialize_instance(inst->inst)); });
}

void isx_instance_free(isx_instance* inst) { delete inst; }

isx_status isx_minimax(const isx_matrix* m, const char* tol, char** report,
                       int* verdict) {
  if (!m) return fail(ISX_INVALID_INPUT, "null matrix");
  return run_guarded_op(report, verdict, [&] {
    return op_minimax(m->values, base_options(m->mode, tol));
  });
}

isx_status isx_convexity(const isx_matrix* m, const char* tol, char** report,
                         int* verdict) {
  if (!m) return fail(ISX_INVALID_INPUT, "null matrix");
  return run_guarded_op(report, verdict, [&] {
    return op_convexity(m->values, base_options(m->mode, tol));
  });
}

isx_status isx_mazur_orlicz(const isx_matrix* m, const char* tol, char** report,
                            int* verdict) {
  if (!m) return fail(ISX_INVALID_INPUT, "null matrix");
  return run_guarded_op(report, verdict, [&] {
    return op_mazur_orlicz(m->values, base_options(m->mode, tol));
  });
}

isx_status isx_konig(const isx_instance* inst, const char* alpha,
                     const char* tol, char** report, int* verdict) {
  if (!inst) return fail(ISX_INVALID_INPUT, "null instance");
  return run_guarded_op(report, verdict, [&] {
    OpOptions options = base_options(inst->inst.scalar_mode, tol);
    if (alpha && *alpha) options.alpha = rational_from_string(alpha);
    return op_konig(inst->inst, options);
  });
}

isx_status isx_fritz_john(const isx_instance* inst, const char* tol,
                          char** report, int* verdict) {
  if (!inst) return fail(ISX_INVALID_INPUT, "null instance");
  return run_guarded_op(report, verdict, [&] {
    return op_fritz_john(inst->inst, base_options(inst->inst.scalar_mode, tol));
  });
}

isx_status isx_kkt(const isx_instance* inst, const char* tol, char** report,
                   int* verdict) {
  if (!inst) return fail(ISX_INVALID_INPUT, "null instance");
  return run_guarded_op(report, verdict, [&] {
    return op_kkt(inst->inst, base_options(inst->inst.scalar_mode, tol));
  });
}

isx_status isx_slater(const isx_instance* inst, const char* tol, char** report,
                      int* verdict) {
  if (!inst) return fail(ISX_INVALID_INPUT, "null instance");
  return run_guarded_op(report, verdict, [&] {
    return op_slater(inst->inst, base_options(inst->inst.scalar_mode, tol));
  });
}

isx_status isx_saddle(const isx_instance* inst, const char* phi,
                      const char* tol, char** report, int* verdict) {
  if (!inst) return fail(ISX_INVALID_INPUT, "null instance");
  if (!phi) return fail(ISX_INVALID_INPUT, "null phi");
  return run_guarded_op(report, verdict, [&] {
    OpOptions options = base_options(inst->inst.scalar_mode, tol);
    options.phi = parse_number_list(phi);
    return op_saddle(inst->inst, options);
  });
}

isx_status isx_study(const char* n_list, const char* grid, const char* tol,
                     int exact, char** report, int* verdict) {
  if (!n_list || !grid) return fail(ISX_INVALID_INPUT, "null argument");
  return run_guarded_op(report, verdict, [&] {
    OpOptions options =
        base_options(exact ? ScalarMode::Rational : ScalarMode::Float64, tol);
    for (const Rational& q : parse_number_list(n_list)) {
      if (q.get_den() != 1 || q < 1) {
        throw Error::invalid("truncation depths must be positive integers");
      }
      options.n_list.push_back(q.get_num().get_ui());
    }
    return op_study(parse_number_list(grid), options);
  });
}

isx_status isx_verify(const isx_instance* inst, const isx_matrix* m,
                      const char* report_json, const char* tol, char** report,
                      int* verdict) {
  if (!report_json) return fail(ISX_INVALID_INPUT, "null report");
  return run_guarded_op(report, verdict, [&] {
    OpOptions options = base_options(
        inst ? inst->inst.scalar_mode : (m ? m->mode : ScalarMode::Float64), tol);
    return op_verify(inst ? &inst->inst : nullptr, m ? &m->values : nullptr,
                     report_json, options);
  });
}

}  // extern "C"
