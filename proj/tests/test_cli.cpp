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

// End-to-end checks of the installed command-line tool: exit codes, report
// shapes, determinism, and the verify loop.

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef INFSUP_CLI_PATH
#error "INFSUP_CLI_PATH must point at the CLI binary"
#endif

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::current_path() / "cli_scratch";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = scratch_dir() / ("stdout." + std::to_string(counter));
  const fs::path err_path = scratch_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string command = std::string(INFSUP_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int status = std::system(command.c_str());
  CliRun result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

constexpr const char* kCounterexGridArg = "\"-2,-1,-0.5,0,0.5,1,2,10\"";

}  // namespace

TEST_CASE("minimax on a csv game") {
  const fs::path game = write_file("pennies.csv", "1,-1\n-1,1\n");
  const CliRun r = run_cli("minimax --csv " + game.string());
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("payload").at("v_mixed").get<double>() == doctest::Approx(0.0));
  CHECK(doc.at("payload").at("v_pure").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("fritz-john on the convex demo exits 0 with a certificate") {
  const CliRun r =
      run_cli("fritz-john --example convex-demo --grid \"-3,-2,-1,0,1\"");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("verdict") == "certificate");
}

TEST_CASE("kkt on the builtin counterexample exits 1 with a witness") {
  const CliRun r =
      run_cli(std::string("kkt --example paper --n 4 --grid ") + kCounterexGridArg);
  REQUIRE(r.exit_code == 1);
  CHECK(json::parse(r.out).at("verdict") == "witness");
}

TEST_CASE("input errors exit 2 with a diagnostic on stderr") {
  SUBCASE("malformed json") {
    const fs::path bad = write_file("bad.json", "{nope");
    const CliRun r = run_cli("kkt --json " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("infsup:") != std::string::npos);
  }
  SUBCASE("unknown subcommand") {
    CHECK(run_cli("frobnicate").exit_code == 2);
  }
  SUBCASE("missing required option") {
    CHECK(run_cli("saddle --example convex-demo --grid \"-1,0\"").exit_code == 2);
  }
  SUBCASE("missing input") {
    CHECK(run_cli("minimax").exit_code == 2);
  }
  SUBCASE("precondition violation: x0 missing") {
    const fs::path inst =
        write_file("nox0.json", R"({"objective":[0],"constraints":[[0]]})");
    const CliRun r = run_cli("fritz-john --json " + inst.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("x0_index") != std::string::npos);
  }
}

TEST_CASE("identical invocations emit byte-identical reports") {
  const fs::path game = write_file("offdiag.csv", "0,-1\n-1,0\n");
  const CliRun a = run_cli("minimax --csv " + game.string() + " --exact");
  const CliRun b = run_cli("minimax --csv " + game.string() + " --exact");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).at("payload").at("v_mixed") == "-0.5");
}

TEST_CASE("exact slater margin on the counterexample truncation") {
  const CliRun r =
      run_cli("slater --example paper --n 4 --grid \"-1,0,1,10\" --exact");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("payload").at("strong_margin") == "-250");
  CHECK(doc.at("payload").at("strong_witness_label") == "10");
}

TEST_CASE("saddle verdicts map to exit codes") {
  CHECK(run_cli("saddle --example convex-demo --grid \"-3,-2,-1,0,1\" --phi 2")
            .exit_code == 0);
  CHECK(run_cli("saddle --example convex-demo --grid \"-3,-2,-1,0,1\" --phi 0")
            .exit_code == 1);
}

TEST_CASE("study runs over the default depth list") {
  const CliRun r = run_cli(std::string("study --grid ") + kCounterexGridArg + " --exact");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.at("payload").at("rows").size() == 4);
  CHECK(doc.at("payload").at("rows")[3].at("n") == 8);
  CHECK(doc.at("payload").at("rows")[3].at("verdict") == "witness");
}

TEST_CASE("verify closes the loop on emitted reports") {
  const fs::path report = scratch_dir() / "kkt_report.json";
  const CliRun emit =
      run_cli("kkt --example convex-demo --grid \"-3,-2,-1,0,1\" --exact --out " +
              report.string());
  REQUIRE(emit.exit_code == 0);
  CHECK(emit.out.empty());

  const CliRun audit =
      run_cli("verify --example convex-demo --grid \"-3,-2,-1,0,1\" --exact --report " +
              report.string());
  CHECK(audit.exit_code == 0);
  CHECK(json::parse(audit.out).at("verdict") == "holds");

  // corrupt the certificate and watch the audit fail
  json doc = json::parse(slurp(report));
  doc["payload"]["certificate"]["kkt_multiplier"][0] = "7";
  const fs::path tampered = write_file("kkt_tampered.json", doc.dump());
  const CliRun bad =
      run_cli("verify --example convex-demo --grid \"-3,-2,-1,0,1\" --exact --report " +
              tampered.string());
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.out).at("verdict") == "fails");
}

TEST_CASE("verify a minimax report against its csv matrix") {
  const fs::path game = write_file("verify_game.csv", "2,0,-1\n-1,1,0\n");
  const fs::path report = scratch_dir() / "mm_report.json";
  REQUIRE(run_cli("minimax --csv " + game.string() + " --out " + report.string())
              .exit_code == 0);
  const CliRun audit =
      run_cli("verify --csv " + game.string() + " --report " + report.string());
  CHECK(audit.exit_code == 0);
}

TEST_CASE("reading the instance from stdin") {
  const fs::path inst = write_file(
      "stdin_inst.json",
      R"({"objective":[4,1,0],"constraints":[[-1,0,1]],"x0_index":1})");
  const CliRun r = run_cli("slater --json - < " + inst.string());
  CHECK(r.exit_code == 0);
}

TEST_CASE("every report kind survives the verify loop") {
  struct Case {
    const char* name;
    std::string emit_args;
    std::string verify_input;
  };
  const fs::path game = write_file("sweep_game.csv", "2,0,-1\n-1,1,0\n");
  const fs::path column = write_file("sweep_column.csv", "3\n-5\n0\n");
  const fs::path konig_inst = write_file(
      "sweep_konig.json", R"({"objective":[0,0],"constraints":[[1,-1],[-1,1]]})");
  const std::string demo = "--example convex-demo --grid \"-3,-2,-1,0,1\"";
  const std::string counterexample =
      std::string("--example paper --n 2 --grid ") + kCounterexGridArg;

  const std::vector<Case> cases = {
      {"minimax", "minimax --csv " + game.string(), "--csv " + game.string()},
      {"convexity-witness", "convexity --csv " + game.string(),
       "--csv " + game.string()},
      {"convexity-convex", "convexity --csv " + column.string(),
       "--csv " + column.string()},
      {"mazur-orlicz", "mazur-orlicz --csv " + game.string(),
       "--csv " + game.string()},
      {"konig", "konig --json " + konig_inst.string() + " --alpha 0",
       "--json " + konig_inst.string()},
      {"fritz-john", "fritz-john " + demo, demo},
      {"fritz-john-witness", "fritz-john " + counterexample, counterexample},
      {"kkt", "kkt " + demo, demo},
      {"slater", "slater " + demo, demo},
      {"saddle", "saddle " + demo + " --phi 2", demo},
      {"study", std::string("study --grid ") + kCounterexGridArg, ""},
  };
  int counter = 0;
  for (const Case& c : cases) {
    for (const char* exact : {"", " --exact"}) {
      CAPTURE(c.name);
      CAPTURE(exact);
      const fs::path report =
          scratch_dir() / ("sweep_" + std::to_string(counter++) + ".json");
      const CliRun emit = run_cli(c.emit_args + exact + " --out " + report.string());
      REQUIRE(emit.exit_code <= 1);
      const CliRun audit =
          run_cli("verify --report " + report.string() + " " + c.verify_input + exact);
      CHECK(audit.exit_code == 0);
      CHECK(json::parse(audit.out).at("verdict") == "holds");
    }
  }
}

TEST_CASE("an unusable multiplier scale is a numerical failure, exit 3") {
  // With --tol 2 the certificate is forced to (rho, phi) = (1, 0) while the
  // Slater margin -10 still clears the tolerance, so the rho > tol guarantee
  // breaks and the run must abort as numerical rather than emit a verdict.
  const fs::path inst = write_file(
      "rho_scale.json",
      R"({"objective":[0,0],"constraints":[[-10,0]],"x0_index":0})");
  const CliRun r = run_cli("kkt --json " + inst.string() + " --tol 2");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("rho") != std::string::npos);
}

TEST_CASE("fritz-john accepts an instance file") {
  const fs::path inst = write_file(
      "fj_file.json",
      R"({"objective":[4,1,0],"constraints":[[-1,0,1]],"x0_index":1})");
  const CliRun r = run_cli("fritz-john --json " + inst.string());
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("verdict") == "certificate");
}
