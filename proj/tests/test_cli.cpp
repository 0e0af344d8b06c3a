#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "config.hpp"

using namespace interfero::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "interfero");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::string field(const std::string& row, std::size_t k) {
  std::istringstream in(row);
  std::string cell;
  for (std::size_t i = 0; i <= k; ++i) std::getline(in, cell, ',');
  return cell;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

const char* kSymmetricConfig =
    "# symmetric two-slit context\n"
    "pb1 = 1/2\npb2 = 1/2\n"
    "p11 = 1/2\np12 = 1/2\np21 = 1/2\np22 = 1/2\n"
    "theta1 = 0\ntheta2 = pi\n";

}  // namespace

TEST_CASE("fit examples") {
  auto r = run_cli({"fit", "0.36", "0.16", "0.76"});
  REQUIRE(r.code == kSuccess);
  auto j = json::parse(r.out);
  CHECK(j["lambda"].get<double>() == doctest::Approx(0.5));
  CHECK(j["regime"] == "trigonometric");
  CHECK(j["phase"].get<double>() == doctest::Approx(1.0471975512));
  CHECK(j["residual"].get<double>() < 1e-10);

  auto half = json::parse(run_cli({"fit", "0.25", "0.25", "0.5"}).out);
  CHECK(half["lambda"].get<double>() == 0.0);
  CHECK(half["phase"].get<double>() == doctest::Approx(std::numbers::pi / 2));

  auto degenerate = run_cli({"fit", "0.25", "0", "0.3"});
  CHECK(degenerate.code == kDomainError);
  CHECK_FALSE(degenerate.err.empty());
}

TEST_CASE("fit exact mode prints rationals") {
  auto j = json::parse(run_cli({"fit", "1/16", "1/16", "1", "--mode", "exact"}).out);
  CHECK(j["lambda"] == "7/1");
  CHECK(j["regime"] == "hyperbolic");
  auto f = json::parse(run_cli({"fit", "1/16", "1/16", "1"}).out);
  CHECK(f["lambda"].get<double>() == doctest::Approx(7.0));
}

TEST_CASE("parse errors exit with 2") {
  CHECK(run_cli({"fit", "x", "0.1", "0.2"}).code == kParseError);
  CHECK(run_cli({"fit", "0.1"}).code == kParseError);
  CHECK(run_cli({"nosuch"}).code == kParseError);
  CHECK(run_cli({"fit", "1.5", "0.1", "0.2"}).code != kSuccess);
  CHECK(run_cli({"profile", "padic", "--p", "4", "--l", "0", "--eps-max", "8"}).code != kSuccess);
}

TEST_CASE("profile trig") {
  auto r = run_cli({"profile", "trig", "--p1", "0.25", "--p2", "0.25", "--max", "6.2832", "--n", "100"});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.rfind("# kind=T\n", 0) == 0);
  CHECK(r.out.find("# tool=interfero") != std::string::npos);
  CHECK(r.out.find("\nr,P_float,P_exact,kind\n") != std::string::npos);
  auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 100);
  CHECK(std::stod(field(rows[0], 1)) == 1.0);
  CHECK(std::stod(field(rows.back(), 1)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.out.find('\r') == std::string::npos);

  auto bad = run_cli({"profile", "trig", "--p1", "0.5", "--p2", "0.5", "--max", "1", "--n", "3"});
  CHECK(bad.code == kDomainError);
}

TEST_CASE("profile padic") {
  auto r = run_cli({"profile", "padic", "--p", "3", "--l", "0", "--eps-max", "8"});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.find("epsilon,v_p_of_1_plus_epsilon,P_exact,P_float,r\n") != std::string::npos);
  auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 6);
  const std::vector<std::string> eps{"1", "2", "4", "5", "7", "8"};
  const std::vector<std::string> exact{"1/1", "1/9", "1/1", "1/9", "1/1", "1/81"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(field(rows[i], 0) == eps[i]);
    CHECK(field(rows[i], 2) == exact[i]);
  }
}

TEST_CASE("profile hyp auto window ends at 1") {
  auto r = run_cli({"profile", "hyp", "--p1", "0.0625", "--p2", "0.0625", "--sign", "+", "--auto-window"});
  REQUIRE(r.code == kSuccess);
  auto rows = data_rows(r.out);
  REQUIRE_FALSE(rows.empty());
  CHECK(field(rows.back(), 1) == "1");
  CHECK(std::stod(field(rows.back(), 0)) == doctest::Approx(std::log(7 + 4 * std::sqrt(3.0))));

  auto empty = run_cli({"profile", "hyp", "--p1", "0.3", "--p2", "0.3", "--sign", "+", "--auto-window"});
  CHECK(empty.code == kDomainError);
}

TEST_CASE("profile json output") {
  auto r = run_cli({"profile", "padic", "--p", "5", "--l", "1", "--eps-max", "24", "--format", "json"});
  REQUIRE(r.code == kSuccess);
  auto j = json::parse(r.out);
  REQUIRE(j["samples"].size() == 20);
  CHECK(j["samples"].back()["P_exact"] == "1/15625");
}

TEST_CASE("totalprob on a config file") {
  auto path = write_temp("interfero_test_symmetric.cfg", kSymmetricConfig);
  auto r = run_cli({"totalprob", path.string()});
  REQUIRE(r.code == kSuccess);
  auto j = json::parse(r.out);
  CHECK(j["quantum"][0].get<double>() == doctest::Approx(1.0));
  CHECK(j["quantum"][1].get<double>() == doctest::Approx(0.0));
  CHECK(j["classical"][0].get<double>() == 0.5);
  CHECK(j["classical"][1].get<double>() == 0.5);
  CHECK(j["normalization"]["normalized"] == true);

  auto exact = json::parse(run_cli({"totalprob", path.string(), "--mode", "exact"}).out);
  CHECK(exact["classical"][0] == "1/2");

  // Flags override the file.
  auto over = json::parse(run_cli({"totalprob", path.string(), "--theta2", "pi/2", "--theta1", "pi/2"}).out);
  CHECK(over["quantum"][0].get<double>() == doctest::Approx(0.5));
  std::filesystem::remove(path);
}

TEST_CASE("config errors name the line") {
  auto path = write_temp("interfero_test_bad.cfg", "pb1 = 1/2\n\nbogus = 3\n");
  auto r = run_cli({"totalprob", path.string()});
  CHECK(r.code == kParseError);
  CHECK(r.err.find(":3:") != std::string::npos);
  CHECK(r.err.find("bogus") != std::string::npos);
  std::filesystem::remove(path);

  std::istringstream dup("pb1 = 0.5\npb1 = 0.5\n");
  CHECK_THROWS_AS(parse_key_values(dup, "dup"), ConfigError);
  std::istringstream noeq("pb1 0.5\n");
  CHECK_THROWS_AS(parse_key_values(noeq, "noeq"), ConfigError);
  std::istringstream ok("# comment\n\n  pb1 = 0.5  \n");
  auto kv = parse_key_values(ok, "ok");
  CHECK(kv.at("pb1").text == "0.5");
  CHECK(kv.at("pb1").line == 3);

  CHECK(run_cli({"totalprob", "/nonexistent/interfero.cfg"}).code == kParseError);
}

TEST_CASE("parse_angle") {
  const double pi = std::numbers::pi;
  CHECK(parse_angle("0") == 0.0);
  CHECK(parse_angle("1.25") == 1.25);
  CHECK(parse_angle("pi") == pi);
  CHECK(parse_angle("-pi/2") == doctest::Approx(-pi / 2));
  CHECK(parse_angle("2*pi/3") == doctest::Approx(2 * pi / 3));
  CHECK(parse_angle("2pi/3") == doctest::Approx(2 * pi / 3));
  CHECK_THROWS_AS(parse_angle("tau"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi/0"), std::invalid_argument);
}

TEST_CASE("padic subcommand") {
  auto r = run_cli({"padic", "--p", "3", "--alpha1", "1", "--alpha2", "1", "--epsilon", "2"});
  REQUIRE(r.code == kSuccess);
  auto j = json::parse(r.out);
  CHECK(j["case"] == "C");
  CHECK(j["P"] == "1/9");
  CHECK(j["lambda"] == "-17/18");
  CHECK(j["within_claimed_range"] == true);
  CHECK(run_cli({"padic", "--p", "3", "--alpha1", "1", "--alpha2", "1", "--epsilon", "3"}).code == kDomainError);
}

TEST_CASE("check subcommand") {
  auto r = run_cli({"check", "--cases", "200"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> commands{
      {"fit", "0.36", "0.16", "0.76"},
      {"profile", "trig", "--p1", "0.25", "--p2", "0.25", "--max", "6.2832", "--n", "100"},
      {"profile", "padic", "--p", "3", "--l", "0", "--eps-max", "8"},
      {"check", "--cases", "100"},
  };
  for (const auto& c : commands) {
    auto a = run_cli(c);
    auto b = run_cli(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "interfero_test_out.csv";
  auto r = run_cli({"profile", "padic", "--p", "3", "--l", "0", "--eps-max", "8", "--out", path.string()});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(data_rows(body.str()).size() == 6);
  std::filesystem::remove(path);
}
