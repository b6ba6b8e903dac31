#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "regulus/cli.hpp"

using json = nlohmann::json;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.exit_code = regulus::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json golden(const std::string& name) {
  std::string path = std::string(REGULUS_SOURCE_DIR) + "/tests/golden/" + name;
  std::ifstream in(path);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

void check_golden(const std::vector<std::string>& args,
                  const std::string& name, int expect_exit) {
  CliRun r = run(args);
  CHECK(r.exit_code == expect_exit);
  json actual = json::parse(r.out);
  REQUIRE(actual.contains("timing_ms"));
  actual["timing_ms"] = 0;
  json expected = golden(name);
  if (actual != expected) {
    CAPTURE(name);
    CAPTURE(actual.dump(2));
    CHECK(actual == expected);
  }
}

}  // namespace

TEST_CASE("golden: expand psi") {
  check_golden({"expand", "--spec", "psi", "--n", "30", "--format", "json"},
               "expand_psi.json", 0);
}

TEST_CASE("golden: expand eta quotient mod 2") {
  check_golden({"expand", "--spec", "5^1,1^-1", "--n", "20", "--mod", "2",
                "--format", "json"},
               "expand_eta_b5.json", 0);
}

TEST_CASE("golden: jacobi cube identity") {
  check_golden({"verify-identity", "--id", "jacobi-cube", "--n", "200",
                "--format", "json"},
               "identity_jacobi.json", 0);
}

TEST_CASE("golden: psi dissection certificate") {
  check_golden({"verify-identity", "--id", "psi-dissect:5", "--format", "json"},
               "identity_psi_dissect5.json", 0);
}

TEST_CASE("golden: family scan over an alpha range") {
  check_golden({"verify-family", "--id", "ped-3", "--alpha", "0..1",
                "--count", "50", "--format", "json"},
               "family_ped3.json", 0);
}

TEST_CASE("golden: flagged formula produces a counterexample and exit 1") {
  check_golden({"verify-family", "--id", "combined-4", "--family", "1",
                "--alpha", "0", "--count", "5", "--format", "json"},
               "family_erratum.json", 1);
}

TEST_CASE("golden: support listing") {
  check_golden({"support", "--function", "psi", "--p", "7", "--format", "json"},
               "support_psi7.json", 0);
}

TEST_CASE("golden: admissible residues") {
  check_golden({"support", "--admissible", "b2-even-j", "--p", "7",
                "--format", "json"},
               "admissible_b2_7.json", 0);
}

TEST_CASE("golden: cover certificate") {
  check_golden({"support", "--cover", "b5", "--p", "17", "--format", "json"},
               "cover_b5_17.json", 0);
}

TEST_CASE("golden: empirical search") {
  check_golden({"search", "--function", "b13", "--mod", "3", "--a-max", "9",
                "--count", "300", "--format", "json"},
               "search_b13.json", 0);
}

TEST_CASE("golden: catalog dump") {
  check_golden({"catalog", "--format", "json"}, "catalog.json", 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"expand", "--spec", "zzz"}).exit_code == 2);
  CHECK(run({"verify-identity", "--id", "no-such-identity"}).exit_code == 2);
  CHECK(run({"verify-identity", "--id", "f-dissect:4"}).exit_code == 2);
  CHECK(run({"search", "--function", "b5", "--a-max", "0"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({"expand", "--spec", "psi", "--format", "bogus"}).exit_code == 2);
  CHECK(run({"verify-family", "--id", "ped-3", "--alpha", "0",
             "--family", "1", "--index", "2"}).exit_code == 2);
  // verified-false exits 1
  CHECK(run({"verify-family", "--id", "combined-4", "--family", "2",
             "--alpha", "0", "--count", "5"}).exit_code == 1);
}

TEST_CASE("environment cap produces a resource failure when too tight") {
  setenv("REGULUS_MAX_TRUNCATION", "50", 1);
  CliRun r = run({"verify-family", "--id", "b5-even-i", "--p", "17",
                  "--alpha", "1", "--index", "3"});
  unsetenv("REGULUS_MAX_TRUNCATION");
  CHECK(r.exit_code == 3);

  // the flag takes precedence over the environment
  setenv("REGULUS_MAX_TRUNCATION", "50", 1);
  CliRun ok = run({"verify-family", "--id", "b5-even-i", "--p", "17",
                   "--alpha", "1", "--index", "3",
                   "--max-truncation", "2000000", "--count", "100"});
  unsetenv("REGULUS_MAX_TRUNCATION");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("csv output carries a header and one row per claim") {
  CliRun r = run({"verify-family", "--id", "b5-even-calkin", "--count", "20",
                  "--format", "csv"});
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line.rfind("origin,function,A,B,m,", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("text output is human-oriented") {
  CliRun r = run({"verify-identity", "--id", "euler-product", "--n", "200"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}
