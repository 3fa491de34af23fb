#pragma once

// Batch experiment runner behind the reldens command-line tool.

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace reldens::cli {

const std::vector<std::string>& subcommands();

struct ExperimentConfig {
  /// Empty together with `pilot` runs every experiment.
  std::string subcommand;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> m_terms;
  std::optional<std::uint64_t> grid;
  std::vector<std::string> sets;
  std::vector<std::string> alphas;
  std::vector<std::int64_t> h;
  std::string mode;
  std::string format = "csv";
  /// Path prefix for output files; empty writes the summary to stdout.
  std::string output;
  std::size_t threads = 0;
  bool pilot = false;
  std::optional<std::uint64_t> memory_budget;
};

/// Throws std::invalid_argument on a bad configuration.
void validate(const ExperimentConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Summary {
  int schema = 1;
  std::string experiment;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  static Summary from_json(const nlohmann::ordered_json& j);
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct ExperimentResult {
  Summary summary;
  Table table;
};

/// Runs one subcommand (config.subcommand must be set).
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Shortest round-trip decimal; integral values print without exponent.
std::string format_number(double x);
std::string to_csv(const Table& table);
std::string to_json_text(const Table& table);

/// Full driver: validation, dispatch, file output. Returns the process exit code
/// (0 ok, 2 validation error, 3 resource error).
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace reldens::cli
