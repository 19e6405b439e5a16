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

#include <json.hpp>

#include <string>
#include <vector>

#include "infsup/instance.hpp"
#include "infsup/matrix.hpp"
#include "infsup/scalar.hpp"

namespace infsup {

/// Options shared by every operation. The tolerance is kept as an exact
/// rational of the caller's literal; float mode converts it, rational mode
/// replaces it with zero so verdicts are exact sign tests.
struct OpOptions {
  ScalarMode mode = ScalarMode::Float64;
  Rational tol = Rational(1, 1000000000);
  Rational alpha = Rational(0);
  std::vector<Rational> phi;           // saddle
  std::vector<std::size_t> n_list;     // study
};

/// A finished report: machine-readable JSON plus the verdict polarity the
/// CLI turns into its exit code (positive -> 0, negative -> 1).
struct OpResult {
  nlohmann::ordered_json report;
  bool negative_verdict = false;

  std::string dump() const { return report.dump(2); }
};

// Matrix-input operations.
OpResult op_minimax(const Matrix<Rational>& a, const OpOptions& options);
OpResult op_convexity(const Matrix<Rational>& a, const OpOptions& options);
OpResult op_mazur_orlicz(const Matrix<Rational>& a, const OpOptions& options);

// Instance-input operations.
OpResult op_konig(const ProgramInstance& inst, const OpOptions& options);
OpResult op_fritz_john(const ProgramInstance& inst, const OpOptions& options);
OpResult op_kkt(const ProgramInstance& inst, const OpOptions& options);
OpResult op_slater(const ProgramInstance& inst, const OpOptions& options);
OpResult op_saddle(const ProgramInstance& inst, const OpOptions& options);

// Generator-input operation.
OpResult op_study(const std::vector<Rational>& grid, const OpOptions& options);

/// Re-checks a previously emitted report against the same input by direct
/// arithmetic only -- no LP is solved. Exactly one of inst / mat must be
/// given, matching what the original command consumed. The scalar mode is
/// taken from the report itself.
OpResult op_verify(const ProgramInstance* inst, const Matrix<Rational>* mat,
                   const std::string& report_text, const OpOptions& options);

}  // namespace infsup
