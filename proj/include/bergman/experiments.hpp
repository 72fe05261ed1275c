#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bergman/analytic.hpp"

namespace bergman {

// Batch driver behind the CLI. Configs come in as JSON text; a config is
// either valid or rejected with the full list of violations (machine-readable
// codes, not first-error-only). For a fixed config and seed the produced
// report files are byte-identical across runs.
namespace experiments {

struct ConfigIssue {
  std::string code;  // stable machine-readable code
  std::string path;  // JSON pointer-ish location
  std::string message;
};

struct ExperimentConfig {
  std::string command;
  std::string weight = "lebesgue";  // catalog name or a CSV table path
  GridSpec grid;
  std::string params_json = "{}";  // command-specific key/value map
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  std::string raw;  // canonical serialized form (hashed into reports)
};

// exit codes of run(): 0 ok, 2 config error, 3 numeric guard tripped,
// 4 resource cap exceeded
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitResource = 4;

std::vector<ConfigIssue> parse_config(const std::string& text, ExperimentConfig& out);

int run(const ExperimentConfig& config);

// FNV-1a 64 over the canonical config bytes; embedded in every report.
std::uint64_t config_hash(const std::string& canonical);

// fixed 17-significant-digit decimal form used by the CSV writers
std::string fmt17(double v);

// parses a function literal {"poly": [[re,im],...], "zeros": [[re,im,mult],...],
// "exp_poly": [[re,im],...], "poly_power": t} from params
AnalyticFunction function_from_json(const std::string& json_text);

}  // namespace experiments

}  // namespace bergman
