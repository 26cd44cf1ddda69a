// End-to-end checks of the cavbal command line: exit codes, output
// schemas, determinism. The binary path comes in through CAVBAL_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd = std::string(CAVBAL_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("balance emits the published charge") {
  const CliResult r = run_cli("balance --format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["charge_si"].get<double>() - 1.55e-19) <= 0.005e-19);
  CHECK(j["alpha"].get<double>() == j["alpha"].get<double>());
  for (const char* key :
       {"charge_gaussian", "charge_si", "alpha", "alpha_inverse", "alpha_exp",
        "discrepancy_a", "discrepancy_b"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("balance output is byte-identical across runs") {
  const CliResult a = run_cli("balance --format json");
  const CliResult b = run_cli("balance --format json");
  CHECK(a.out == b.out);
  const CliResult c = run_cli("casimir --diameter 2.5um --route 3d --format csv");
  const CliResult d = run_cli("casimir --diameter 2.5um --route 3d --format csv");
  REQUIRE(c.status == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("casimir routes have opposite signs and ratio -3") {
  const CliResult r3 = run_cli("casimir --diameter 1m --route 3d --format json");
  const CliResult r1 = run_cli("casimir --diameter 1m --route 1d --format json");
  REQUIRE(r3.status == 0);
  REQUIRE(r1.status == 0);
  const json j3 = json::parse(r3.out);
  const json j1 = json::parse(r1.out);
  const double e3 = j3["energy"].get<double>();
  const double e1 = j1["energy"].get<double>();
  CHECK(e3 < 0.0);
  CHECK(e1 > 0.0);
  CHECK(std::abs(e1 / e3 + 3.0) <= 1e-12);
  // parsed doubles are exact, so the coefficient ratio is exactly -3
  CHECK(j1["series_coefficient"].get<double>() /
            j3["series_coefficient"].get<double>() ==
        -3.0);
  CHECK(j3["pressure"].get<double>() < 0.0);
  CHECK(j1["pressure"].is_null());
}

TEST_CASE("casimir csv header is stable") {
  const CliResult r = run_cli("casimir --diameter 1mm --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        "route,diameter,energy,pressure,series_coefficient,zeta4");
}

TEST_CASE("sweep keeps the charge column constant") {
  const CliResult r = run_cli("sweep --diameters 1e-9m,1m --format csv");
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "diameter,charge_gaussian,charge_si");
  const std::string q1 = row1.substr(row1.find(','));
  const std::string q2 = row2.substr(row2.find(','));
  CHECK(q1 == q2);  // identical beyond the diameter column
}

TEST_CASE("constants subcommand") {
  const CliResult r = run_cli("constants --format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.is_array());
  CHECK(j.size() >= 10);
}

TEST_CASE("moments subcommand with oracle") {
  const CliResult r =
      run_cli("moments --kernel j0 --eps 0.5 --lambda 1 --oracle --format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  const double closed = j["closed_form"].get<double>();
  const double quad = j["quadrature"].get<double>();
  CHECK(std::abs(closed - quad) <= 1e-9 * std::abs(closed));
  CHECK(j["limit"].get<double>() < 0.0);
}

TEST_CASE("sum-check subcommand") {
  const CliResult r = run_cli(
      "sum-check --family lorentzian --beta 1 --truncation 1000000 "
      "--format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["converged"].get<bool>());
  CHECK(j["abs_diff"].get<double>() < 1e-10);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("sum-check --family unknown").status == 1);
  CHECK(run_cli("nonsense").status == 1);
  CHECK(run_cli("casimir --diameter 1m --route 5d").status == 1);
  CHECK(run_cli("casimir --diameter 1parsec").status == 1);
  CHECK(run_cli("sweep --diameters ,").status == 1);
  CHECK(run_cli("balance --format yaml").status == 1);
  CHECK(run_cli("balance --output /nonexistent-dir/out.json").status == 1);
}

TEST_CASE("numeric failures exit 2 with a structured report") {
  const CliResult domain = run_cli("sum-check --family lorentzian --beta -1");
  CHECK(domain.status == 2);
  const json jd = json::parse(domain.err);
  CHECK(jd["error"] == "domain_error");

  const CliResult quad =
      run_cli("moments --kernel j0 --eps 1e-6 --lambda 1 --oracle");
  CHECK(quad.status == 2);
  const json jq = json::parse(quad.err);
  CHECK(jq["error"] == "numeric_failure");
  CHECK(jq["error_estimate"].get<double>() > 0.0);
}

TEST_CASE("output path writes the same bytes as stdout") {
  const CliResult direct = run_cli("balance --format csv");
  const std::string path = "balance_out.tmp";
  const CliResult filed = run_cli("balance --format csv --output " + path);
  REQUIRE(filed.status == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}
