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

#include <stdexcept>
#include <string>
#include <utility>

namespace infsup {

/// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
/// InvalidInput -> exit 2, Numerical -> exit 3.
enum class ErrorKind {
  InvalidInput,  // malformed input, schema violation, unmet precondition
  Numerical,     // solver breakdown or a certificate that failed recheck
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  static Error invalid(std::string message) {
    return Error(ErrorKind::InvalidInput, std::move(message));
  }
  static Error numerical(std::string message) {
    return Error(ErrorKind::Numerical, std::move(message));
  }

 private:
  ErrorKind kind_;
};

}  // namespace infsup
