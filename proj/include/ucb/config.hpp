#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ucb/policies.hpp"
#include "ucb/simulator.hpp"

namespace ucb::cli {

// Raised on any malformed or inconsistent experiment config; `field()` names
// the first offending field by its path, e.g. "instance.sigma".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct PolicyEntry {
  std::string name;  // stable label used in file names and summaries
  policies::PolicySpec spec;
};

struct MaxWalkCase {
  double b = 0.0;
  std::int64_t horizon = 0;
};
struct DriftedCase {
  double b = 0.0;
  double gamma = 0.0;
  std::int64_t horizon = 0;
};
struct LaiBoundaryCase {
  double n = 0.0;
  double gamma = 1.0;
  int points_per_decade = 200;
};

struct CrossingSection {
  std::int64_t replications = 100000;
  std::uint64_t seed = 20240901;
  std::vector<MaxWalkCase> max_walk;
  std::vector<DriftedCase> drifted;
  std::vector<LaiBoundaryCase> lai_boundary;
};

// The verification grids, used when a config has no "crossing" section.
CrossingSection default_crossing_section();

struct ExperimentConfig {
  sim::BanditInstance instance;
  std::vector<PolicyEntry> policies;
  std::int64_t replications = 1000;
  std::uint64_t master_seed = 1;
  std::filesystem::path output_dir = "out";
  std::optional<CrossingSection> crossing;
  std::uint64_t config_hash = 0;  // FNV-1a 64 of the canonical JSON form
};

ExperimentConfig parse_config(const std::filesystem::path& path);
ExperimentConfig parse_config_text(const std::string& json_text);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace ucb::cli
