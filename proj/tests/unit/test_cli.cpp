#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "chebdense/cli.hpp"
#include "chebdense/errors.hpp"
#include "support/brute.hpp"

using namespace chebdense;
using namespace chebdense::cli;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "chebdense");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  Result r;
  const ParseOutcome parsed = parse_command_line(static_cast<int>(argv.size()), argv.data());
  if (!parsed.config) {
    r.code = parsed.exit_code;
    r.out = parsed.message;
    return r;
  }
  std::ostringstream out, err;
  r.code = run(*parsed.config, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_count forms") {
  CHECK(parse_count("1000000") == 1000000);
  CHECK(parse_count("1e6") == 1000000);
  CHECK(parse_count("10^6") == 1000000);
  CHECK(parse_count("25e2") == 2500);
  CHECK(parse_count("2^32") == (u64{1} << 32));
  CHECK_THROWS_AS(parse_count(""), ConfigError);
  CHECK_THROWS_AS(parse_count("-5"), ConfigError);
  CHECK_THROWS_AS(parse_count("1e99"), ConfigError);
  CHECK_THROWS_AS(parse_count("1.5e3"), ConfigError);
  CHECK(parse_count_list("1e3,5000,10^4") == std::vector<u64>{1000, 5000, 10000});
  CHECK_THROWS_AS(parse_count_list("1000,"), ConfigError);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3) == "0.333333333333");
  CHECK(format_double(1e-20) == "1e-20");
  CHECK(format_double(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_double(0.0) == "0");
}

TEST_CASE("run config round-trips through its canonical form") {
  const char* argv[] = {"chebdense", "density", "--ctx", "s3-x3-2", "--class", "3-cycles",
                        "-m", "3", "-X", "1e5", "--checkpoints", "1e3,1e4", "--threads", "2",
                        "--segment-size", "2^16", "--format", "json"};
  const ParseOutcome parsed = parse_command_line(18, argv);
  REQUIRE(parsed.config);
  const RunConfig& cfg = *parsed.config;
  CHECK(cfg.m == 3);
  CHECK(cfg.limit == 100000);
  CHECK(cfg.checkpoints == std::vector<u64>{1000, 10000});
  CHECK(cfg.segment_size == 65536);
  CHECK(cfg.format == OutputFormat::json);
  const std::string canonical = cfg.to_canonical();
  const RunConfig back = RunConfig::from_canonical(canonical);
  CHECK(back == cfg);
  CHECK(back.to_canonical() == canonical);

  RunConfig defaults;
  CHECK(RunConfig::from_canonical(defaults.to_canonical()) == defaults);
  CHECK_THROWS_AS(RunConfig::from_canonical("{}"), ConfigError);

  const Result dumped = invoke({"pnt", "-X", "500", "--dump-config"});
  CHECK(dumped.code == kExitOk);
  CHECK(nlohmann::json::parse(dumped.out).at("X") == 500);
}

TEST_CASE("parse errors exit 2") {
  CHECK(invoke({}).code == kExitConfig);
  CHECK(invoke({"nosuch"}).code == kExitConfig);
  CHECK(invoke({"pnt", "-X", "ten"}).code == kExitConfig);
  CHECK(invoke({"pnt", "--format", "xml"}).code == kExitConfig);
  CHECK(invoke({"pnt", "--threads", "-1"}).code == kExitConfig);
  CHECK(invoke({"density", "--mode", "sideways"}).code == kExitConfig);
  CHECK(invoke({"frobenius", "-p", "5"}).code == kExitConfig);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("verify exit statuses") {
  const Result ok = invoke({"verify", "--bound", "1000"});
  CHECK(ok.code == kExitOk);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("reports").size() > 10);

  CHECK(invoke({"verify", "--bound", "1"}).code == kExitOk);

  const Result bad = invoke({"verify", "--bound", "1000", "--corrupt-lambda", "30"});
  CHECK(bad.code == kExitVerifyFailed);
  CHECK(bad.err.find("n = 30") != std::string::npos);
  CHECK(nlohmann::json::parse(bad.out).at("status") == "fail");
}

TEST_CASE("density output") {
  const Result r = invoke({"density", "--mode", "progression", "-k", "4", "-l", "1", "-m", "2",
                           "-X", "1000"});
  REQUIRE(r.code == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x", "class_id", "partial_sum", "target", "abs_err"});
  double expect = 0.0;
  for (u64 n = 2; n <= 1000; ++n) {
    if (brute::smallest_prime(n) % 4 == 1) expect -= brute::lambda(n, 2) / static_cast<double>(n);
  }
  CHECK(std::stod(rows[1][2]) == doctest::Approx(expect).epsilon(1e-11));
  CHECK(r.out.find('\r') == std::string::npos);

  const Result g = invoke({"density", "--mode", "galois", "--ctx", "s3-x3-2", "--class", "all",
                           "-X", "1000", "--checkpoints", "100,1000"});
  REQUIRE(g.code == kExitOk);
  const auto grows = csv_rows(g.out);
  REQUIRE(grows.size() == 7);
  for (std::size_t i = 1; i < grows.size(); ++i) {
    const double err = std::abs(std::stod(grows[i][2]) - std::stod(grows[i][3]));
    CHECK(std::stod(grows[i][4]) == doctest::Approx(err).epsilon(1e-10));
  }
  CHECK(grows[1][0] == "100");
  CHECK(grows[4][0] == "1000");
  CHECK(grows[6][1] == "3-cycles");

  CHECK(invoke({"density", "--mode", "progression", "-k", "4", "-l", "2", "-X", "100"}).code ==
        kExitPrecondition);
  CHECK(invoke({"density", "--ctx", "/no/such/file.json", "-X", "100"}).code == kExitConfig);
  CHECK(invoke({"density", "--ctx", "s3-x3-2", "--class", "nope", "-X", "100"}).code ==
        kExitPrecondition);
  CHECK(invoke({"density", "-k", "4", "-m", "1", "-X", "100"}).code == kExitPrecondition);
  CHECK(invoke({"density", "--mode", "galois", "-X", "100"}).code == kExitConfig);

  const Result j = invoke({"density", "-k", "4", "-X", "1000", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("columns").size() == 5);
  CHECK(doc.at("rows").size() == 1);
}

TEST_CASE("pnt, summatory and pm-stats output") {
  const Result pnt = invoke({"pnt", "-m", "2", "-X", "10"});
  REQUIRE(pnt.code == kExitOk);
  const auto rows = csv_rows(pnt.out);
  CHECK(rows[0] == std::vector<std::string>{"x", "L", "A"});
  double l10 = 0;
  for (u64 n = 1; n <= 10; ++n) l10 += brute::lambda(n, 2) / static_cast<double>(n);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(l10).epsilon(1e-11));

  const Result s = invoke({"summatory", "-m", "2", "-X", "10"});
  CHECK(csv_rows(s.out)[1][1] == "0");

  const Result pm = invoke({"pm-stats", "-m", "2", "-X", "3"});
  REQUIRE(pm.code == kExitOk);
  const auto pmrows = csv_rows(pm.out);
  CHECK(pmrows[0] == std::vector<std::string>{"x", "e", "e_over_x", "H"});
  CHECK(pmrows[1][1] == "0");
}

TEST_CASE("frobenius output") {
  const Result one = invoke({"frobenius", "--ctx", "s3-x3-2", "-p", "31"});
  REQUIRE(one.code == kExitOk);
  CHECK(csv_rows(one.out)[1] == std::vector<std::string>{"31", "1-1-1", "identity"});
  const Result many = invoke({"frobenius", "--ctx", "s3-x3-2", "-X", "7"});
  const auto rows = csv_rows(many.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1] == std::vector<std::string>{"2", "none", "EXCLUDED:ramified"});
  CHECK(rows[3] == std::vector<std::string>{"5", "1-2", "transpositions"});
  CHECK(rows[4] == std::vector<std::string>{"7", "3", "3-cycles"});
  CHECK(invoke({"frobenius", "--ctx", "s3-x3-2", "-p", "33"}).code == kExitPrecondition);
  // ord_5(7) = 4, so Phi_5 stays irreducible mod 7.
  CHECK(invoke({"frobenius", "--ctx", "cyclotomic:5", "-p", "7"}).out.find("7,4,2") !=
        std::string::npos);
  CHECK(invoke({"frobenius", "--ctx", "cyclotomic:5", "-p", "11"}).out.find("11,1-1-1-1,1") !=
        std::string::npos);
}

TEST_CASE("sieve-dump output") {
  const Result r = invoke({"sieve-dump", "-m", "2", "-X", "12"});
  REQUIRE(r.code == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0] == std::vector<std::string>{"n", "spf", "mu", "lambda", "big_omega", "P", "P_m"});
  CHECK(rows[1] == std::vector<std::string>{"1", "1", "1", "1", "0", "1", "1"});
  CHECK(rows[12] == std::vector<std::string>{"12", "2", "0", "-1", "3", "3", "3"});
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args{"density", "--ctx", "s3-x3-2", "-X", "200000",
                                      "--segment-size", "30000"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(invoke(threaded).out == a.out);
}

}  // TEST_SUITE
