#include <charconv>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebdense/cli.hpp"
#include "chebdense/errors.hpp"

namespace chebdense::cli {

using nlohmann::json;

namespace {

std::optional<u64> parse_digits(std::string_view s) {
  u64 v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<u64> checked_pow(u64 base, u64 exp) {
  u64 v = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && v > UINT64_MAX / base) return std::nullopt;
    v *= base;
  }
  return v;
}

std::string format_name(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

OutputFormat format_from(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + s + "'");
}

}  // namespace

u64 parse_count(std::string_view text) {
  const auto fail = [&]() -> u64 {
    throw ConfigError("expected a non-negative integer like 1000000, 1e6 or 10^6, got '" +
                      std::string(text) + "'");
  };
  if (auto v = parse_digits(text)) return *v;
  for (const std::string_view sep : {std::string_view("e"), std::string_view("E")}) {
    const auto pos = text.find(sep);
    if (pos == std::string_view::npos) continue;
    const auto mant = parse_digits(text.substr(0, pos));
    const auto exp = parse_digits(text.substr(pos + 1));
    if (!mant || !exp) return fail();
    const auto scale = checked_pow(10, *exp);
    if (!scale || (*mant != 0 && *scale > UINT64_MAX / *mant)) return fail();
    return *mant * *scale;
  }
  if (const auto pos = text.find('^'); pos != std::string_view::npos) {
    const auto base = parse_digits(text.substr(0, pos));
    const auto exp = parse_digits(text.substr(pos + 1));
    if (!base || !exp) return fail();
    const auto v = checked_pow(*base, *exp);
    if (!v) return fail();
    return *v;
  }
  return fail();
}

std::vector<u64> parse_count_list(std::string_view text) {
  std::vector<u64> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    out.push_back(parse_count(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string RunConfig::to_canonical() const {
  const auto opt = [](const std::optional<u64>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json doc{{"subcommand", subcommand},
           {"m", m},
           {"X", limit},
           {"checkpoints", checkpoints},
           {"mode", mode},
           {"k", k},
           {"l", l},
           {"ctx", context},
           {"class", class_id},
           {"p", opt(prime)},
           {"out", out},
           {"format", format_name(format)},
           {"bounds",
            {{"lambda_oracle", bounds.lambda_oracle},
             {"liouville", bounds.liouville},
             {"multiplicative", bounds.multiplicative},
             {"exact_identities", bounds.exact_identities},
             {"duality", bounds.duality},
             {"dirichlet", bounds.dirichlet}}},
           {"corrupt_lambda_at", opt(corrupt_lambda_at)},
           {"threads", threads},
           {"segment_size", segment_size},
           {"progress", progress}};
  return doc.dump();
}

RunConfig RunConfig::from_canonical(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto opt = [&](const char* key) -> std::optional<u64> {
      const auto& v = doc.at(key);
      if (v.is_null()) return std::nullopt;
      return v.get<u64>();
    };
    RunConfig c;
    c.subcommand = doc.at("subcommand").get<std::string>();
    c.m = doc.at("m").get<int>();
    c.limit = doc.at("X").get<u64>();
    c.checkpoints = doc.at("checkpoints").get<std::vector<u64>>();
    c.mode = doc.at("mode").get<std::string>();
    c.k = doc.at("k").get<u64>();
    c.l = doc.at("l").get<std::int64_t>();
    c.context = doc.at("ctx").get<std::string>();
    c.class_id = doc.at("class").get<std::string>();
    c.prime = opt("p");
    c.out = doc.at("out").get<std::string>();
    c.format = format_from(doc.at("format").get<std::string>());
    const auto& b = doc.at("bounds");
    c.bounds.lambda_oracle = b.at("lambda_oracle").get<u64>();
    c.bounds.liouville = b.at("liouville").get<u64>();
    c.bounds.multiplicative = b.at("multiplicative").get<u64>();
    c.bounds.exact_identities = b.at("exact_identities").get<u64>();
    c.bounds.duality = b.at("duality").get<u64>();
    c.bounds.dirichlet = b.at("dirichlet").get<u64>();
    c.corrupt_lambda_at = opt("corrupt_lambda_at");
    c.threads = doc.at("threads").get<int>();
    c.segment_size = doc.at("segment_size").get<u64>();
    c.progress = doc.at("progress").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid run configuration: ") + e.what());
  }
}

ParseOutcome parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Generalized Liouville sums, prime-divisor duality and Chebotarev densities"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string x_text, cps_text, format_text, segment_text, p_text;
  std::string bound_text, oracle_text, liouville_text, mult_text, ident_text, dual_text, dir_text;
  std::string corrupt_text;
  bool dump_config = false;

  const auto common_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format: csv or json");
    sub->add_option("--out", cfg.out, "Output path, '-' for standard output");
    sub->add_flag("--dump-config", dump_config, "Print the canonical run configuration and exit");
  };
  const auto streaming = [&](CLI::App* sub) {
    sub->add_option("-m", cfg.m, "lambda_m order, 2 <= m <= 64");
    sub->add_option("-X", x_text, "Upper limit X (accepts 1e7 or 10^7)");
    sub->add_option("--checkpoints", cps_text, "Comma-separated checkpoints (default powers of 10)");
    sub->add_option("--threads", cfg.threads, "Worker threads, 0 for the OpenMP default");
    sub->add_option("--segment-size", segment_text, "Indices per sieve segment");
    sub->add_flag("--progress", cfg.progress, "Report progress on standard error");
    common_output(sub);
  };

  CLI::App* verify = app.add_subcommand("verify", "Run the exact identity suites");
  verify->add_option("--bound", bound_text, "Override every exhaustive bound");
  verify->add_option("--lambda-bound", oracle_text, "Sieve vs divisor-sum oracle bound");
  verify->add_option("--liouville-bound", liouville_text, "lambda_2 = (-1)^Omega bound");
  verify->add_option("--multiplicative-bound", mult_text, "Multiplicativity bound");
  verify->add_option("--identity-bound", ident_text, "Partition-sum / mu-recovery bound");
  verify->add_option("--duality-bound", dual_text, "Duality and remark bound");
  verify->add_option("--dirichlet-bound", dir_text, "Dirichlet truncation point");
  verify->add_option("--corrupt-lambda", corrupt_text, "Test hook: corrupt lambda_m(n)")
      ->group("");
  verify->add_option("--threads", cfg.threads, "Worker threads, 0 for the OpenMP default");
  common_output(verify);

  CLI::App* density = app.add_subcommand("density", "Class-restricted lambda_m density sums");
  density->add_option("--mode", cfg.mode, "progression or galois")
      ->check(CLI::IsMember({"progression", "galois"}));
  density->add_option("-k", cfg.k, "Progression modulus");
  density->add_option("-l", cfg.l, "Progression residue");
  density->add_option("--ctx", cfg.context, "Context preset or JSON file");
  density->add_option("--class", cfg.class_id, "Class id or 'all'");
  streaming(density);

  CLI::App* pnt = app.add_subcommand("pnt", "L(x) and A(x) partial sums");
  streaming(pnt);
  CLI::App* summatory = app.add_subcommand("summatory", "Summatory function of lambda_m");
  streaming(summatory);
  CLI::App* pm = app.add_subcommand("pm-stats", "P_m(n) != P(n) counts and harmonic sums");
  streaming(pm);

  CLI::App* frob = app.add_subcommand("frobenius", "Frobenius classes of primes");
  frob->add_option("--ctx", cfg.context, "Context preset or JSON file")->required();
  frob->add_option("-p", p_text, "Single prime to classify");
  frob->add_option("-X", x_text, "Classify all primes <= X");
  common_output(frob);

  CLI::App* dump = app.add_subcommand("sieve-dump", "Per-n sieve values for n <= X");
  dump->add_option("-m", cfg.m, "lambda_m order");
  dump->add_option("-X", x_text, "Upper limit X");
  common_output(dump);

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os_out, os_err;
    outcome.exit_code = app.exit(e, os_out, os_err);
    if (outcome.exit_code != 0) outcome.exit_code = kExitConfig;
    outcome.message = os_out.str() + os_err.str();
    return outcome;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "verify") cfg.format = OutputFormat::json;
    if (!format_text.empty()) cfg.format = format_from(format_text);
    if (!x_text.empty()) cfg.limit = parse_count(x_text);
    if (!cps_text.empty()) cfg.checkpoints = parse_count_list(cps_text);
    if (!segment_text.empty()) cfg.segment_size = parse_count(segment_text);
    if (!p_text.empty()) cfg.prime = parse_count(p_text);
    if (!bound_text.empty()) cfg.bounds = VerifyBounds::uniform(parse_count(bound_text));
    if (!oracle_text.empty()) cfg.bounds.lambda_oracle = parse_count(oracle_text);
    if (!liouville_text.empty()) cfg.bounds.liouville = parse_count(liouville_text);
    if (!mult_text.empty()) cfg.bounds.multiplicative = parse_count(mult_text);
    if (!ident_text.empty()) cfg.bounds.exact_identities = parse_count(ident_text);
    if (!dual_text.empty()) cfg.bounds.duality = parse_count(dual_text);
    if (!dir_text.empty()) cfg.bounds.dirichlet = parse_count(dir_text);
    if (!corrupt_text.empty()) cfg.corrupt_lambda_at = parse_count(corrupt_text);
    if (cfg.threads < 0) throw ConfigError("--threads must be >= 0");
    if (cfg.segment_size == 0) throw ConfigError("--segment-size must be >= 1");
  } catch (const ConfigError& e) {
    outcome.exit_code = kExitConfig;
    outcome.message = std::string("error: ") + e.what() + "\n";
    return outcome;
  }

  if (dump_config) {
    outcome.message = cfg.to_canonical() + "\n";
    return outcome;
  }
  outcome.config = std::move(cfg);
  return outcome;
}

}  // namespace chebdense::cli
