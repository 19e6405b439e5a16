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

#include "infsup/instance.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

#include "infsup/error.hpp"

namespace infsup {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// SAX-to-DOM builder that keeps every float literal as its raw text, so
/// "0.1" can later become exactly 1/10 instead of the nearest double.
/// Integer tokens stay integers (they are exact either way).
class RawNumberBuilder : public nlohmann::json_sax<json> {
 public:
  json take() { return std::move(root_); }

  bool null() override { return push(json(nullptr)); }
  bool boolean(bool v) override { return push(json(v)); }
  bool number_integer(number_integer_t v) override { return push(json(v)); }
  bool number_unsigned(number_unsigned_t v) override { return push(json(v)); }
  bool number_float(number_float_t, const string_t& raw) override {
    return push(json(raw));
  }
  bool string(string_t& v) override { return push(json(v)); }
  bool binary(binary_t& v) override { return push(json(v)); }

  bool start_object(std::size_t) override {
    stack_.push_back(json::object());
    return true;
  }
  bool key(string_t& v) override {
    keys_.push_back(v);
    return true;
  }
  bool end_object() override { return pop(); }
  bool start_array(std::size_t) override {
    stack_.push_back(json::array());
    return true;
  }
  bool end_array() override { return pop(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    throw Error::invalid("malformed JSON at byte " + std::to_string(position) +
                         ": " + ex.what());
  }

 private:
  bool push(json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return true;
    }
    json& top = stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
    } else {
      top[keys_.back()] = std::move(value);
      keys_.pop_back();
    }
    return true;
  }

  bool pop() {
    json done = std::move(stack_.back());
    stack_.pop_back();
    return push(std::move(done));
  }

  json root_;
  std::vector<json> stack_;
  std::vector<std::string> keys_;
};

json parse_raw_json(std::string_view text) {
  RawNumberBuilder builder;
  json::sax_parse(text, &builder);
  return builder.take();
}

Rational number_at(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) {
    return Rational(static_cast<unsigned long>(v.get<std::uint64_t>()));
  }
  if (v.is_string()) {
    try {
      return rational_from_string(v.get<std::string>());
    } catch (const Error& e) {
      throw Error::invalid(path + ": " + e.what());
    }
  }
  if (v.is_number_float()) {
    // Only reachable for documents built in memory; text input goes through
    // the raw-literal builder above.
    Rational q;
    mpq_set_d(q.get_mpq_t(), v.get<double>());
    return q;
  }
  throw Error::invalid(path + ": expected a number");
}

std::vector<std::string> labels_at(const json& v, const std::string& path) {
  if (!v.is_array()) throw Error::invalid(path + ": expected an array of strings");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw Error::invalid(path + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<std::string> default_labels(char prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    out.push_back(std::string(1, prefix) + std::to_string(i));
  }
  return out;
}

// In float mode an entry must convert to a finite double; in rational mode
// every rational is acceptable.
void check_finite(const Rational& q, ScalarMode mode, const std::string& path) {
  if (mode == ScalarMode::Float64 && !std::isfinite(rational_to_double(q))) {
    throw Error::invalid(path + ": magnitude overflows float64");
  }
}

ordered_json render_number(const Rational& q, ScalarMode mode) {
  if (mode == ScalarMode::Float64) return ordered_json(rational_to_double(q));
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    return ordered_json(q.get_num().get_si());
  }
  return ordered_json(rational_to_decimal(q));
}

}  // namespace

void ProgramInstance::validate() const {
  const std::size_t l = constraints.rows(), n = constraints.cols();
  if (l == 0 || n == 0) throw Error::invalid("instance has no rows or points");
  if (objective.size() != n) {
    throw Error::invalid("objective length " + std::to_string(objective.size()) +
                         " does not match " + std::to_string(n) + " points");
  }
  if (lambda_labels.size() != l || x_labels.size() != n) {
    throw Error::invalid("label counts do not match instance dimensions");
  }
  if (x0_index && *x0_index >= n) {
    throw Error::invalid("x0_index: " + std::to_string(*x0_index) +
                         " out of range (have " + std::to_string(n) + " points)");
  }
}

ProgramInstance parse_instance(std::string_view json_text, ScalarMode mode) {
  const json doc = parse_raw_json(json_text);
  if (!doc.is_object()) throw Error::invalid("instance document must be a JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "lambda_labels" && key != "x_labels" && key != "objective" &&
        key != "constraints" && key != "x0_index") {
      throw Error::invalid("unknown field '" + key + "'");
    }
  }

  ProgramInstance inst;
  inst.scalar_mode = mode;

  if (!doc.contains("objective") || !doc["objective"].is_array() ||
      doc["objective"].empty()) {
    throw Error::invalid("objective: expected a nonempty array of numbers");
  }
  for (std::size_t j = 0; j < doc["objective"].size(); ++j) {
    const std::string path = "objective[" + std::to_string(j) + "]";
    Rational q = number_at(doc["objective"][j], path);
    check_finite(q, mode, path);
    inst.objective.push_back(std::move(q));
  }
  const std::size_t n = inst.objective.size();

  if (!doc.contains("constraints") || !doc["constraints"].is_array() ||
      doc["constraints"].empty()) {
    throw Error::invalid("constraints: expected a nonempty array of rows");
  }
  const std::size_t l = doc["constraints"].size();
  inst.constraints = Matrix<Rational>(l, n);
  for (std::size_t i = 0; i < l; ++i) {
    const json& row = doc["constraints"][i];
    const std::string row_path = "constraints[" + std::to_string(i) + "]";
    if (!row.is_array()) throw Error::invalid(row_path + ": expected an array");
    if (row.size() != n) {
      throw Error::invalid(row_path + ": row length " + std::to_string(row.size()) +
                           " does not match objective length " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string path = row_path + "[" + std::to_string(j) + "]";
      Rational q = number_at(row[j], path);
      check_finite(q, mode, path);
      inst.constraints.at(i, j) = std::move(q);
    }
  }

  if (doc.contains("x0_index") && !doc["x0_index"].is_null()) {
    const json& v = doc["x0_index"];
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      throw Error::invalid("x0_index: expected an integer");
    }
    const std::int64_t idx = v.get<std::int64_t>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= n) {
      throw Error::invalid("x0_index: " + std::to_string(idx) +
                           " out of range (have " + std::to_string(n) + " points)");
    }
    inst.x0_index = static_cast<std::size_t>(idx);
  }

  inst.lambda_labels = doc.contains("lambda_labels")
                           ? labels_at(doc["lambda_labels"], "lambda_labels")
                           : default_labels('g', l);
  inst.x_labels = doc.contains("x_labels") ? labels_at(doc["x_labels"], "x_labels")
                                           : default_labels('x', n);
  inst.validate();
  return inst;
}

std::string serialize_instance(const ProgramInstance& inst) {
  inst.validate();
  ordered_json doc;
  doc["lambda_labels"] = inst.lambda_labels;
  doc["x_labels"] = inst.x_labels;
  doc["objective"] = ordered_json::array();
  for (const Rational& q : inst.objective) {
    doc["objective"].push_back(render_number(q, inst.scalar_mode));
  }
  doc["constraints"] = ordered_json::array();
  for (std::size_t i = 0; i < inst.num_rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < inst.num_points(); ++j) {
      row.push_back(render_number(inst.constraints.at(i, j), inst.scalar_mode));
    }
    doc["constraints"].push_back(std::move(row));
  }
  if (inst.x0_index) doc["x0_index"] = *inst.x0_index;
  return doc.dump(2);
}

bool instances_equal(const ProgramInstance& a, const ProgramInstance& b) {
  if (a.scalar_mode != b.scalar_mode || a.lambda_labels != b.lambda_labels ||
      a.x_labels != b.x_labels || a.x0_index != b.x0_index) {
    return false;
  }
  if (a.num_rows() != b.num_rows() || a.num_points() != b.num_points()) return false;
  const auto same = [&](const Rational& x, const Rational& y) {
    if (a.scalar_mode == ScalarMode::Rational) return x == y;
    return rational_to_double(x) == rational_to_double(y);
  };
  for (std::size_t j = 0; j < a.num_points(); ++j) {
    if (!same(a.objective[j], b.objective[j])) return false;
  }
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    for (std::size_t j = 0; j < a.num_points(); ++j) {
      if (!same(a.constraints.at(i, j), b.constraints.at(i, j))) return false;
    }
  }
  return true;
}

Matrix<Rational> parse_csv_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<Rational> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string cell = line.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        row.push_back(rational_from_string(cell));
      } catch (const Error& e) {
        throw Error::invalid("line " + std::to_string(lineno) + ": " + e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error::invalid("line " + std::to_string(lineno) + ": row length " +
                           std::to_string(row.size()) + " does not match " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error::invalid("matrix input is empty");
  return Matrix<Rational>::from_rows(rows);
}

std::vector<Rational> parse_number_list(std::string_view text) {
  std::vector<Rational> out;
  std::string buf(text);
  std::size_t start = 0;
  while (start <= buf.size()) {
    const std::size_t comma = buf.find(',', start);
    const std::string cell = buf.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(rational_from_string(cell));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ProgramInstance generate_cubic_counterexample(std::size_t n_trunc,
                                       const std::vector<Rational>& grid,
                                       ScalarMode mode) {
  if (n_trunc == 0) throw Error::invalid("truncation depth must be >= 1");
  if (grid.empty()) throw Error::invalid("grid is empty");
  std::optional<std::size_t> zero_at;
  for (std::size_t j = 0; j < grid.size() && !zero_at; ++j) {
    if (grid[j] == 0) zero_at = j;
  }
  if (!zero_at) throw Error::invalid("grid must contain the point 0");

  ProgramInstance inst;
  inst.scalar_mode = mode;
  inst.objective = grid;
  inst.constraints = Matrix<Rational>(n_trunc, grid.size());
  for (std::size_t i = 0; i < n_trunc; ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const Rational cube = grid[j] * grid[j] * grid[j];
      inst.constraints.at(i, j) = Rational(-cube / Rational(static_cast<long>(i + 1)));
    }
  }
  inst.x0_index = zero_at;
  inst.lambda_labels.reserve(n_trunc);
  for (std::size_t i = 1; i <= n_trunc; ++i) {
    inst.lambda_labels.push_back("g" + std::to_string(i));
  }
  for (const Rational& q : grid) inst.x_labels.push_back(rational_to_decimal(q));
  inst.validate();
  return inst;
}

ProgramInstance generate_convex_demo(const std::vector<Rational>& grid,
                                     ScalarMode mode) {
  if (grid.empty()) throw Error::invalid("grid is empty");
  std::optional<std::size_t> anchor;
  for (std::size_t j = 0; j < grid.size() && !anchor; ++j) {
    if (grid[j] == -1) anchor = j;
  }
  if (!anchor) throw Error::invalid("grid must contain the point -1");

  ProgramInstance inst;
  inst.scalar_mode = mode;
  inst.constraints = Matrix<Rational>(1, grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    inst.objective.push_back(Rational(grid[j] * grid[j]));
    inst.constraints.at(0, j) = Rational(grid[j] + 1);
  }
  inst.x0_index = anchor;
  inst.lambda_labels = {"g1"};
  for (const Rational& q : grid) inst.x_labels.push_back(rational_to_decimal(q));
  inst.validate();
  return inst;
}

ProgramInstance generate_example(std::string_view name, std::size_t n_trunc,
                                 const std::vector<Rational>& grid,
                                 ScalarMode mode) {
  if (name == "paper") return generate_cubic_counterexample(n_trunc, grid, mode);
  if (name == "convex-demo") return generate_convex_demo(grid, mode);
  throw Error::invalid("unknown example '" + std::string(name) +
                       "' (expected 'paper' or 'convex-demo')");
}

}  // namespace infsup
