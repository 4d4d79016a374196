#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "subprocess.hpp"

using test_support::run_command;
using test_support::TempDir;

namespace {

const std::string kCli = NATGAME_CLI_PATH;

const char* kFiveProgramJson = R"({
  "programs": ["maternal_capital", "family_mortgage", "large_family_benefits",
               "preschool_development", "medical_support"],
  "unit": "thousand newborns",
  "t": [30, 28, 26, 24, 22]
})";

std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("solve reports the five-program scenario") {
  TempDir dir;
  const auto file = dir.write("five.json", kFiveProgramJson);
  const auto run = run_command(kCli + " solve " + quoted(file));
  REQUIRE(run.exit_code == 0);

  const auto report = nlohmann::json::parse(run.output);
  CHECK(report.at("method") == "analytic");
  CHECK(report.at("value").get<double>() == doctest::Approx(20.5517772).epsilon(1e-6));
  CHECK(report.at("allocation")[0].get<double>() == doctest::Approx(0.315).epsilon(1e-2));
  CHECK(report.at("certificate").at("valid") == true);

  // byte-determinism
  const auto again = run_command(kCli + " solve " + quoted(file));
  CHECK(again.output == run.output);
}

TEST_CASE("the oracle flag forces the LP path to the same value") {
  TempDir dir;
  const auto file = dir.write("five.json", kFiveProgramJson);
  const auto fast = run_command(kCli + " solve " + quoted(file));
  const auto forced = run_command(kCli + " solve --oracle " + quoted(file));
  REQUIRE(fast.exit_code == 0);
  REQUIRE(forced.exit_code == 0);

  const auto a = nlohmann::json::parse(fast.output);
  const auto b = nlohmann::json::parse(forced.output);
  CHECK(b.at("method") == "lp");
  CHECK(std::abs(a.at("value").get<double>() - b.at("value").get<double>()) <= 1e-9);
}

TEST_CASE("single-program games solve to value zero") {
  TempDir dir;
  const auto file = dir.write("single.json", R"({"t": [10]})");
  const auto run = run_command(kCli + " solve " + quoted(file));
  REQUIRE(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.output);
  CHECK(report.at("value").get<double>() == 0.0);
  CHECK(report.at("allocation")[0].get<double>() == 1.0);
}

TEST_CASE("non-decreasing losses are rejected without the relaxed flag") {
  TempDir dir;
  const auto file = dir.write("tied.json", R"({"t": [30, 30, 26]})");
  CHECK(run_command(kCli + " solve " + quoted(file)).exit_code == 2);
  CHECK(run_command(kCli + " solve --relaxed " + quoted(file)).exit_code == 0);
}

TEST_CASE("input errors exit with code 2") {
  TempDir dir;
  CHECK(run_command(kCli + " solve " + quoted(dir.path() / "missing.json")).exit_code == 2);
  const auto bad = dir.write("bad.json", "{ nope");
  CHECK(run_command(kCli + " solve " + quoted(bad)).exit_code == 2);
  const auto negative = dir.write("neg.json", R"({"t": [3, -1]})");
  CHECK(run_command(kCli + " solve " + quoted(negative)).exit_code == 2);
  CHECK(run_command(kCli + " nonsense").exit_code == 2);
}

TEST_CASE("csv input solves like json") {
  TempDir dir;
  const auto file = dir.write("five.csv",
                              "name,t\n"
                              "maternal_capital,30\n"
                              "family_mortgage,28\n"
                              "large_family_benefits,26\n"
                              "preschool_development,24\n"
                              "medical_support,22\n");
  const auto run = run_command(kCli + " solve " + quoted(file));
  REQUIRE(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.output);
  CHECK(report.at("programs")[0] == "maternal_capital");
  CHECK(report.at("value").get<double>() == doctest::Approx(20.5517772).epsilon(1e-6));
}

TEST_CASE("exact mode emits fractions") {
  TempDir dir;
  const auto file = dir.write("frac.json", R"({"t": ["1/3", "1/3.5", "1/4", "1/4.5", "1/5"]})");
  const auto run = run_command(kCli + " solve --exact " + quoted(file));
  REQUIRE(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.output);
  CHECK(report.at("mode") == "exact");
  CHECK(report.at("support") == 4);
  CHECK(report.at("value").get<std::string>() == "1/5");
  CHECK(report.at("allocation")[0].get<std::string>() == "2/5");
  CHECK(report.at("allocation")[4].get<std::string>() == "0");
}

TEST_CASE("a q/r scenario without diagonal structure goes to the LP solver") {
  TempDir dir;
  const auto file = dir.write("qr.json",
                              R"({"q": [1, 1, 1], "r": [[0, 2, 2], [2, 0, 2], [2, 2, 0]]})");
  const auto run = run_command(kCli + " solve " + quoted(file));
  REQUIRE(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.output);
  CHECK(report.at("method") == "lp");
  CHECK(report.at("certificate").at("valid") == true);
}

TEST_CASE("a zero-outcome scenario with constant rows takes the fast path, even unsorted") {
  TempDir dir;
  const auto file = dir.write("diag.json",
                              R"({"q": [0, 0, 0], "r": [[0, 24, 24], [30, 0, 30], [26, 26, 0]]})");
  const auto run = run_command(kCli + " solve " + quoted(file));
  REQUIRE(run.exit_code == 0);
  const auto report = nlohmann::json::parse(run.output);
  CHECK(report.at("method") == "analytic");
  const auto oracle = run_command(kCli + " solve --oracle " + quoted(file));
  const auto lp = nlohmann::json::parse(oracle.output);
  CHECK(std::abs(report.at("value").get<double>() - lp.at("value").get<double>()) <= 1e-9);
}

TEST_CASE("table format prints a readable report") {
  TempDir dir;
  const auto file = dir.write("five.json", kFiveProgramJson);
  const auto run = run_command(kCli + " solve --format table " + quoted(file));
  REQUIRE(run.exit_code == 0);
  CHECK(run.output.find("method            analytic") != std::string::npos);
  CHECK(run.output.find("maternal_capital") != std::string::npos);
  CHECK(run.output.find("certificate       valid") != std::string::npos);
}

TEST_CASE("certify accepts a correct solution and rejects a wrong one") {
  TempDir dir;
  const auto matrix = dir.write("m.json", R"({"t": [2, 1]})");
  const auto good = dir.write("good.json",
                              R"({"x": ["1/3", "2/3"], "y": ["2/3", "1/3"], "value": "2/3"})");
  const auto wrong = dir.write("wrong.json",
                               R"({"x": [0.5, 0.5], "y": [0.5, 0.5], "value": 0.75})");

  CHECK(run_command(kCli + " certify " + quoted(matrix) + " " + quoted(good)).exit_code == 0);
  CHECK(run_command(kCli + " certify --exact " + quoted(matrix) + " " + quoted(good)).exit_code ==
        0);

  const auto rejected = run_command(kCli + " certify " + quoted(matrix) + " " + quoted(wrong));
  CHECK(rejected.exit_code == 3);
  const auto cert = nlohmann::json::parse(rejected.output);
  CHECK(cert.at("valid") == false);

  // trivial 1x1 game certifies at zero tolerance
  const auto one = dir.write("one.json", R"({"H": [[7]]})");
  const auto one_sol = dir.write("one_sol.json", R"({"x": [1], "y": [1], "value": 7})");
  CHECK(run_command(kCli + " certify --tol 0 " + quoted(one) + " " + quoted(one_sol)).exit_code ==
        0);
}

TEST_CASE("demo exits cleanly and flags the documented discrepancies") {
  const auto run = run_command(kCli + " demo");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("demographic-support") != std::string::npos);
  CHECK(run.output.find("fractional-losses") != std::string::npos);
  CHECK(run.output.find("MISMATCH (documented)") != std::string::npos);
  CHECK(run.output.find("agrees") != std::string::npos);

  const auto exact = run_command(kCli + " demo --exact");
  CHECK(exact.exit_code == 0);
  CHECK(exact.output.find("1/5") != std::string::npos);

  const auto as_json = run_command(kCli + " demo --format json");
  CHECK(as_json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(as_json.output);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].at("oracle_agrees") == true);
  CHECK(parsed[1].at("computed_support") == 4);
  CHECK(parsed[1].at("reference_support") == 3);
}

TEST_CASE("batch mode solves a directory deterministically") {
  TempDir dir;
  dir.write("a.json", R"({"t": [30, 28]})");
  dir.write("b.json", R"({"t": [5, 4, 3]})");
  dir.write("c.json", R"({"t": [3, 9]})");  // invalid: increasing

  const auto run = run_command(kCli + " solve --batch " + quoted(dir.path()));
  CHECK(run.exit_code == 2);
  const auto parsed = nlohmann::json::parse(run.output);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0].at("file") == "a.json");
  CHECK(parsed[0].at("exit") == 0);
  CHECK(parsed[1].at("report").at("certificate").at("valid") == true);
  CHECK(parsed[2].at("exit") == 2);

  const auto again = run_command(kCli + " solve --batch " + quoted(dir.path()));
  CHECK(again.output == run.output);
}
