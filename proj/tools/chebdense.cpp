#include <fstream>
#include <iostream>

#include "chebdense/cli.hpp"

int main(int argc, char** argv) {
  using namespace chebdense::cli;
  std::ios::sync_with_stdio(false);
  const ParseOutcome parsed = parse_command_line(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  const RunConfig& cfg = *parsed.config;
  if (cfg.out == "-") return run(cfg, std::cout, std::cerr);

  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
    return kExitConfig;
  }
  const int status = run(cfg, file, std::cerr);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing '" << cfg.out << "'\n";
    return kExitConfig;
  }
  return status;
}
