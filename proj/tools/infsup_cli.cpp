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

// Command-line frontend. Talks to the library exclusively through the C API
// in infsup.h and maps its statuses onto the exit-code contract:
//   0 positive verdict, 1 negative verdict, 2 input/usage error,
//   3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "infsup.h"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct MatrixDeleter {
  void operator()(isx_matrix* m) const { isx_matrix_free(m); }
};
struct InstanceDeleter {
  void operator()(isx_instance* i) const { isx_instance_free(i); }
};
using MatrixHandle = std::unique_ptr<isx_matrix, MatrixDeleter>;
using InstanceHandle = std::unique_ptr<isx_instance, InstanceDeleter>;

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "infsup: " << message << "\n";
  std::exit(code);
}

[[noreturn]] void die_status(isx_status status) {
  die(status == ISX_NUMERICAL ? kExitNumerical : kExitInput, isx_last_error());
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonArgs {
  std::string json_path;
  std::string csv_path;
  std::string example;
  std::string grid;
  std::size_t n_trunc = 1;
  std::string tol = "1e-9";
  std::string out_path;
  bool exact = false;

  void attach(CLI::App* cmd, bool with_inputs = true) {
    if (with_inputs) {
      auto* json_opt = cmd->add_option("--json", json_path, "instance JSON file ('-' for stdin)");
      auto* csv_opt = cmd->add_option("--csv", csv_path, "matrix CSV file ('-' for stdin)");
      auto* ex_opt = cmd->add_option("--example", example,
                                     "builtin generator: paper | convex-demo");
      json_opt->excludes(csv_opt)->excludes(ex_opt);
      csv_opt->excludes(ex_opt);
      cmd->add_option("--grid", grid, "comma-separated grid for --example");
      cmd->add_option("--n", n_trunc, "truncation depth for --example paper");
    }
    cmd->add_option("--tol", tol, "float-mode tolerance (default 1e-9)");
    cmd->add_flag("--exact", exact, "exact rational arithmetic");
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
  }

  MatrixHandle load_matrix() const {
    if (csv_path.empty()) die(kExitInput, "this command needs --csv");
    isx_matrix* m = nullptr;
    const isx_status st =
        isx_matrix_parse_csv(read_input(csv_path).c_str(), exact ? 1 : 0, &m);
    if (st != ISX_OK) die_status(st);
    return MatrixHandle(m);
  }

  InstanceHandle load_instance() const {
    isx_instance* inst = nullptr;
    isx_status st = ISX_INVALID_INPUT;
    if (!json_path.empty()) {
      st = isx_instance_parse_json(read_input(json_path).c_str(), exact ? 1 : 0,
                                   &inst);
    } else if (!example.empty()) {
      if (grid.empty()) die(kExitInput, "--example needs --grid");
      st = isx_instance_example(example.c_str(), grid.c_str(), n_trunc,
                                exact ? 1 : 0, &inst);
    } else {
      die(kExitInput, "this command needs --json or --example");
    }
    if (st != ISX_OK) die_status(st);
    return InstanceHandle(inst);
  }
};

int emit(const CommonArgs& args, isx_status status, char* report, int verdict) {
  if (status != ISX_OK) die_status(status);
  std::string text(report);
  isx_string_free(report);
  if (args.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) die(kExitInput, "cannot write '" + args.out_path + "'");
    out << text << "\n";
  }
  return verdict == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LP-backed certificates and witnesses for sample-discretized "
               "semi-infinite programs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(isx_version()));

  CommonArgs minimax_args, convexity_args, mo_args, konig_args, fj_args, kkt_args,
      slater_args, saddle_args, study_args, verify_args;
  std::string alpha = "0";
  std::string phi;
  std::string n_list = "1,2,4,8";
  std::string report_path;

  auto* cmd_minimax = app.add_subcommand(
      "minimax", "mixed and pure game value of a matrix with mu and phi");
  minimax_args.attach(cmd_minimax);

  auto* cmd_convexity = app.add_subcommand(
      "convexity", "infsup-convexity verdict for the rows of a matrix");
  convexity_args.attach(cmd_convexity);

  auto* cmd_mo = app.add_subcommand(
      "mazur-orlicz",
      "dominated functional matching the coordinate-max minimum over the "
      "hull of the matrix columns");
  mo_args.attach(cmd_mo);

  auto* cmd_konig = app.add_subcommand(
      "konig", "functional with f + alpha <= phi.G on the sample, or witness");
  konig_args.attach(cmd_konig);
  cmd_konig->add_option("--alpha", alpha, "shift applied to the objective (default 0)");

  auto* cmd_fj = app.add_subcommand(
      "fritz-john", "normalized multiplier pair (rho, phi) at x0, or witness");
  fj_args.attach(cmd_fj);

  auto* cmd_kkt = app.add_subcommand(
      "kkt", "KKT multiplier at x0 under the Slater condition, or witness");
  kkt_args.attach(cmd_kkt);

  auto* cmd_slater = app.add_subcommand(
      "slater", "strong and weak Slater conditions on the sample");
  slater_args.attach(cmd_slater);

  auto* cmd_saddle = app.add_subcommand(
      "saddle", "saddle-point test of (x0, phi) for the Lagrangian");
  saddle_args.attach(cmd_saddle);
  cmd_saddle->add_option("--phi", phi, "comma-separated multiplier weights")
      ->required();

  auto* cmd_study = app.add_subcommand(
      "study", "counterexample truncation study over --n-list on --grid");
  study_args.attach(cmd_study, /*with_inputs=*/false);
  cmd_study->add_option("--grid", study_args.grid, "comma-separated grid")
      ->required();
  cmd_study->add_option("--n-list", n_list, "truncation depths (default 1,2,4,8)");

  auto* cmd_verify = app.add_subcommand(
      "verify", "re-check an emitted report by direct arithmetic");
  verify_args.attach(cmd_verify);
  cmd_verify->add_option("--report", report_path, "report JSON file ('-' for stdin)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "infsup: " << e.what() << "\n";
    return kExitInput;
  }

  char* report = nullptr;
  int verdict = 0;

  if (cmd_minimax->parsed()) {
    MatrixHandle m = minimax_args.load_matrix();
    const isx_status st = isx_minimax(m.get(), minimax_args.tol.c_str(), &report, &verdict);
    return emit(minimax_args, st, report, verdict);
  }
  if (cmd_convexity->parsed()) {
    MatrixHandle m = convexity_args.load_matrix();
    const isx_status st = isx_convexity(m.get(), convexity_args.tol.c_str(), &report, &verdict);
    return emit(convexity_args, st, report, verdict);
  }
  if (cmd_mo->parsed()) {
    MatrixHandle m = mo_args.load_matrix();
    const isx_status st = isx_mazur_orlicz(m.get(), mo_args.tol.c_str(), &report, &verdict);
    return emit(mo_args, st, report, verdict);
  }
  if (cmd_konig->parsed()) {
    InstanceHandle inst = konig_args.load_instance();
    const isx_status st = isx_konig(inst.get(), alpha.c_str(), konig_args.tol.c_str(), &report, &verdict);
    return emit(konig_args, st, report, verdict);
  }
  if (cmd_fj->parsed()) {
    InstanceHandle inst = fj_args.load_instance();
    const isx_status st = isx_fritz_john(inst.get(), fj_args.tol.c_str(), &report, &verdict);
    return emit(fj_args, st, report, verdict);
  }
  if (cmd_kkt->parsed()) {
    InstanceHandle inst = kkt_args.load_instance();
    const isx_status st = isx_kkt(inst.get(), kkt_args.tol.c_str(), &report, &verdict);
    return emit(kkt_args, st, report, verdict);
  }
  if (cmd_slater->parsed()) {
    InstanceHandle inst = slater_args.load_instance();
    const isx_status st = isx_slater(inst.get(), slater_args.tol.c_str(), &report, &verdict);
    return emit(slater_args, st, report, verdict);
  }
  if (cmd_saddle->parsed()) {
    InstanceHandle inst = saddle_args.load_instance();
    const isx_status st = isx_saddle(inst.get(), phi.c_str(), saddle_args.tol.c_str(), &report, &verdict);
    return emit(saddle_args, st, report, verdict);
  }
  if (cmd_study->parsed()) {
    const isx_status st = isx_study(n_list.c_str(), study_args.grid.c_str(), study_args.tol.c_str(), study_args.exact ? 1 : 0, &report, &verdict);
    return emit(study_args, st, report, verdict);
  }
  if (cmd_verify->parsed()) {
    InstanceHandle inst;
    MatrixHandle m;
    if (!verify_args.json_path.empty() || !verify_args.example.empty()) {
      inst = verify_args.load_instance();
    } else if (!verify_args.csv_path.empty()) {
      m = verify_args.load_matrix();
    }
    const isx_status st = isx_verify(inst.get(), m.get(), read_input(report_path).c_str(), verify_args.tol.c_str(), &report, &verdict);
    return emit(verify_args, st, report, verdict);
  }
  die(kExitInput, "no subcommand given");
}
