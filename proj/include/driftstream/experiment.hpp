#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "driftstream/generators.hpp"
#include "driftstream/policy.hpp"
#include "driftstream/prequential.hpp"
#include "driftstream/schema.hpp"
#include "driftstream/stream.hpp"

namespace driftstream {

enum class Scenario { NoDrift, Abrupt, Gradual, RealData };
enum class Algorithm { FaseAl, Fase, FixedUncertainty, VarUncertainty, RandUncertainty, SelSampling };

std::string_view scenario_name(Scenario scenario);
Scenario parse_scenario(std::string_view name);  // throws std::invalid_argument
std::string_view algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);  // throws std::invalid_argument

/// Labeling budget an algorithm runs under when none is given explicitly:
/// 0.05 for the ensemble policy, 0.1 for the reference strategies, full
/// supervision for the plain ensemble.
double default_budget(Algorithm algorithm);

/// Noise a synthetic dataset carries by default: none for stagger (its
/// labeling rules are meant to be exactly learnable), attribute flips for
/// led (whose difficulty is defined by segment noise), class flips
/// elsewhere, all at 10%.
NoiseSpec default_noise(Family family);

struct ExperimentConfig {
  std::string dataset = "sea";  // family name, or a file path with scenario "real"
  Scenario scenario = Scenario::NoDrift;
  Algorithm algorithm = Algorithm::FaseAl;
  std::uint64_t length = 1'000'000;  // 0 = run a file to the end
  std::vector<std::uint64_t> seeds = {1};
  double budget = -1.0;      // < 0: default_budget(algorithm)
  double delta = 0.05;       // random-branch share of the split strategy
  double step = 0.01;        // threshold step of the variable strategies
  double fixed_threshold = 0.9;
  int n_learners = 10;
  std::uint64_t window = 0;       // 0: auto_window(length)
  double noise_rate = -1.0;       // < 0: default_noise(family)
  std::uint64_t drift_width = 1000;  // transition width of gradual scenarios
  std::string class_column;       // class column for CSV files ("" = last)
  bool parallel_slots = false;

  double effective_budget() const;
  std::uint64_t effective_window() const;
};

/// The instance stream for one run: synthetic family with the scenario's
/// drift schedule (changes at 25%, 50%, 75% of the length; widths 0 or
/// `drift_width`) and the dataset's noise, or a parsed real file. All
/// randomness derives from `master_seed`.
std::unique_ptr<InstanceSource> build_stream(const ExperimentConfig& config,
                                             std::uint64_t master_seed);

/// The policy for one run, seeded independently of the stream.
std::unique_ptr<ActivePolicy> build_policy(std::shared_ptr<const Schema> schema,
                                           const ExperimentConfig& config,
                                           std::uint64_t master_seed);

struct RunRecord {
  std::string dataset;
  Scenario scenario = Scenario::NoDrift;
  Algorithm algorithm = Algorithm::FaseAl;
  std::uint64_t seed = 0;
  std::uint64_t length = 0;
  double budget = 0.0;
  PrequentialResult result;
};

/// One full prequential run at the given seed (offset by the environment
/// seed base for stream and policy construction, reported unchanged).
RunRecord run_single(const ExperimentConfig& config, std::uint64_t seed);

// --- result files ------------------------------------------------------

std::string result_csv_header();
std::string result_csv_row(const RunRecord& record);
std::string curve_csv_header();
std::string curve_csv_rows(const RunRecord& record);

struct ResultRow {
  std::string dataset;
  std::string scenario;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::uint64_t length = 0;
  double budget = 0.0;
  double accuracy = 0.0;
  double labeled_fraction = 0.0;
  double runtime_s = 0.0;
};

/// Reads a result CSV produced by result_csv_row. Also accepts a bare
/// numeric list (one value per line, no header), mapping each value to the
/// accuracy field with empty keys. Throws ParseError on malformed input.
std::vector<ResultRow> read_result_csv(const std::string& text);

/// Offset added to every user-facing seed, from DRIFTSTREAM_SEED_BASE
/// (unset or empty = 0). Throws std::invalid_argument on a non-numeric
/// value.
std::uint64_t seed_base_from_env();

}  // namespace driftstream
