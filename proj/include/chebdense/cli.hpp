#pragma once

// Command-line front end. Data goes to the output stream, diagnostics and
// progress to the error stream.
//
// Exit statuses: 0 success, 1 verification failure, 2 configuration or file
// error, 3 precondition violation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chebdense/identities.hpp"
#include "chebdense/segment.hpp"

namespace chebdense::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecondition = 3;

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string subcommand;
  int m = 2;
  u64 limit = 1000000;  // -X
  std::vector<u64> checkpoints;
  // density: "progression" or "galois"; empty picks galois iff a context is given.
  std::string mode;
  u64 k = 4;
  std::int64_t l = 1;
  std::string context;  // preset name or JSON file path
  std::string class_id = "all";
  std::optional<u64> prime;  // frobenius -p
  std::string out = "-";
  OutputFormat format = OutputFormat::csv;
  VerifyBounds bounds;
  std::optional<u64> corrupt_lambda_at;
  int threads = 0;
  u64 segment_size = kDefaultSegmentSize;
  bool progress = false;

  // Canonical JSON with every field present; from_canonical inverts it.
  std::string to_canonical() const;
  static RunConfig from_canonical(std::string_view text);

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// "1000000", "1e6" and "10^6" all parse to 1000000. Throws ConfigError.
u64 parse_count(std::string_view text);
std::vector<u64> parse_count_list(std::string_view text);

struct ParseOutcome {
  std::optional<RunConfig> config;  // empty when parsing ended the run (help, errors)
  int exit_code = kExitOk;
  std::string message;
};

ParseOutcome parse_command_line(int argc, const char* const* argv);

// Dispatches on cfg.subcommand and maps library errors to exit statuses.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_density(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_pnt(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_summatory(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_pm_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_frobenius(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sieve_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Tabular output shared by the CSV-producing subcommands.
using Cell = std::variant<u64, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Doubles with 12 significant digits, '.' as decimal point, LF line ends.
std::string format_double(double v);
void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, OutputFormat format, std::ostream& out);

std::string report_json(const std::vector<IdentityReport>& reports, const VerifyBounds& bounds);

}  // namespace chebdense::cli
