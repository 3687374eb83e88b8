// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stochcond/inference.hpp"
#include "stochcond/kernels.hpp"
#include "stochcond/models/commute.hpp"

namespace stochcond {

// Optional fields fall back to per-study defaults (see resolve_defaults).
struct ExperimentConfig {
  std::string study = "conjugate-check";  // conjugate-check, commute, nypopu, sailing
  std::string variant = "stochastic";     // commute only
  std::optional<std::string> algorithm;   // is, pmmh, sghmc, bbvi
  std::size_t draws = 10000;
  std::optional<std::size_t> burn_in;  // default: 20% of draws
  std::optional<std::size_t> n;        // draws per likelihood estimate
  std::uint64_t seed = 1;
  std::size_t chains = 1;
  Exec exec = Exec::serial;

  std::optional<double> step_size;
  std::optional<double> friction;
  std::optional<std::size_t> leapfrog_steps;
  std::optional<std::size_t> batch;
  std::optional<double> proposal_scale;
  std::size_t particles = 10000;
  std::size_t iterations = 2000;
  double eta = 0.1;

  int lake_size = 25;
  double temperature = 0.1;
  std::size_t episodes = 10000;
  int sample = 1;
  std::size_t days = 30;
  std::uint64_t data_seed = 0;  // 0: the golden dataset seed
  std::size_t reps = 10000;

  std::string out;  // empty: $STOCHCOND_OUT_DIR or ./out
  std::string format = "csv";
};

inline constexpr std::uint64_t kCommuteGoldenSeed = 20200530;

// Settings are `key = value`; keys use dashes (underscores are accepted).
// Throws ConfigError for unknown keys or malformed values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);
// Parses a `key = value` file with `#` comments into ordered settings.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);
std::vector<std::string> known_settings();

// Empty iff run() would pass its precondition checks.
std::vector<std::string> validate(const ExperimentConfig& config);

// Config with every optional field filled in.
struct ResolvedConfig {
  ExperimentConfig config;
  std::string algorithm;
  std::size_t burn_in;
  std::size_t n;
  double step_size;
  double friction;
  std::size_t leapfrog_steps;
  std::size_t batch;
  double proposal_scale;
};
ResolvedConfig resolve_defaults(const ExperimentConfig& config);

struct ExperimentResult {
  std::vector<std::string> param_names;
  // Draws in constrained space, one row per sample; chain index per row.
  std::vector<PosteriorSample> draws;
  std::vector<std::size_t> chain;
  nlohmann::ordered_json summary;
};

// Runs the experiment in memory. Throws ConfigError on invalid configs and
// stochcond::Error on inference failures.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string draws_csv(const ExperimentResult& result, bool with_chain);
nlohmann::ordered_json draws_json(const ExperimentResult& result, bool with_chain);

// Writes draws.csv (or draws.json) and summary.json into the output
// directory; returns the directory used.
std::string write_outputs(const ExperimentConfig& config, const ExperimentResult& result);

std::string default_output_dir();

// Shortest round-trip decimal form, '.' separator.
std::string format_double(double v);

// Golden data.
std::string commute_csv(const CommuteData& data);
CommuteData read_commute_csv(const std::string& path);
CommuteData golden_commute_data();
std::string sailing_optimal_csv(const std::vector<int>& lakes, double tolerance = 1e-9);
// Writes commute_30d.csv and sailing_optimal.csv into dir; returns paths.
std::vector<std::string> regenerate_golden(const std::string& dir);

}  // namespace stochcond
