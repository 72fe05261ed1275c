// bergman-lab: batch driver for the weighted-Bergman-space laboratory.
//
//   bergman-lab <command> --config <path> [--out <dir>] [--seed <n>]
//
// Commands: weight-report, zero-test, factorize, dominate, sample,
// kernel-check. Exit codes: 0 ok, 2 config error, 3 numeric guard tripped,
// 4 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bergman/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for weighted Bergman spaces"};
  app.require_subcommand(0);

  std::string command, config_path, out_dir;
  long long seed = -1;

  app.add_option("command", command,
                 "weight-report | zero-test | factorize | dominate | sample | kernel-check")
      ->required();
  app.add_option("--config", config_path, "JSON experiment config")->required();
  app.add_option("--out", out_dir, "output directory (overrides the config)");
  app.add_option("--seed", seed, "seed (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? bergman::experiments::kExitConfig : 0;
  }

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "config error [missing-file] cannot open " << config_path << "\n";
    return bergman::experiments::kExitConfig;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  bergman::experiments::ExperimentConfig cfg;
  auto issues = bergman::experiments::parse_config(buf.str(), cfg);
  if (!command.empty() && cfg.command.empty()) cfg.command = command;
  if (!command.empty() && !cfg.command.empty() && cfg.command != command) {
    std::cerr << "config error [command-mismatch] CLI says '" << command << "', config says '"
              << cfg.command << "'\n";
    return bergman::experiments::kExitConfig;
  }
  if (!issues.empty()) {
    for (const auto& i : issues)
      std::cerr << "config error [" << i.code << "] " << i.path << ": " << i.message << "\n";
    return bergman::experiments::kExitConfig;
  }
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);

  return bergman::experiments::run(cfg);
}
