#include "driftstream/experiment.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <utility>

#include "driftstream/arff.hpp"
#include "driftstream/baselines.hpp"
#include "driftstream/csv.hpp"
#include "driftstream/errors.hpp"
#include "driftstream/fase.hpp"
#include "driftstream/text.hpp"

namespace driftstream {

namespace {

// Tags for the per-run seed substreams; one master seed per run fans out to
// independent generator, noise, model, and strategy streams.
constexpr std::uint64_t kTagGenerator = 1;
constexpr std::uint64_t kTagNoise = 2;
constexpr std::uint64_t kTagEnsemble = 3;
constexpr std::uint64_t kTagStrategy = 4;

}  // namespace

std::string_view scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::NoDrift: return "nodrift";
    case Scenario::Abrupt: return "abrupt";
    case Scenario::Gradual: return "gradual";
    case Scenario::RealData: return "real";
  }
  throw std::invalid_argument("unknown scenario");
}

Scenario parse_scenario(std::string_view name) {
  if (name == "nodrift") return Scenario::NoDrift;
  if (name == "abrupt") return Scenario::Abrupt;
  if (name == "gradual") return Scenario::Gradual;
  if (name == "real") return Scenario::RealData;
  throw std::invalid_argument("unknown scenario: " + std::string(name));
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::FaseAl: return "fase_al";
    case Algorithm::Fase: return "fase";
    case Algorithm::FixedUncertainty: return "fixed";
    case Algorithm::VarUncertainty: return "variable";
    case Algorithm::RandUncertainty: return "random_var";
    case Algorithm::SelSampling: return "sel_sampling";
  }
  throw std::invalid_argument("unknown algorithm");
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "fase_al") return Algorithm::FaseAl;
  if (name == "fase") return Algorithm::Fase;
  if (name == "fixed") return Algorithm::FixedUncertainty;
  if (name == "variable") return Algorithm::VarUncertainty;
  if (name == "random_var") return Algorithm::RandUncertainty;
  if (name == "sel_sampling") return Algorithm::SelSampling;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

double default_budget(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::FaseAl: return 0.05;
    case Algorithm::Fase: return 1.0;
    default: return 0.1;
  }
}

NoiseSpec default_noise(Family family) {
  switch (family) {
    case Family::Stagger: return {0.0, NoiseSpec::Mode::ClassFlip};
    case Family::Led: return {0.1, NoiseSpec::Mode::AttributeFlip};
    default: return {0.1, NoiseSpec::Mode::ClassFlip};
  }
}

double ExperimentConfig::effective_budget() const {
  return budget < 0.0 ? default_budget(algorithm) : budget;
}

std::uint64_t ExperimentConfig::effective_window() const {
  return window > 0 ? window : auto_window(length);
}

std::unique_ptr<InstanceSource> build_stream(const ExperimentConfig& config,
                                             std::uint64_t master_seed) {
  if (config.scenario == Scenario::RealData) {
    std::filesystem::path path(config.dataset);
    ParsedDataset parsed;
    if (path.extension() == ".csv") {
      parsed = parse_csv_file(path, config.class_column);
    } else {
      parsed = parse_arff_file(path);
    }
    return std::move(parsed.stream);
  }

  const Family family = parse_family(config.dataset);
  DriftSpec drift;
  if (config.scenario != Scenario::NoDrift) {
    drift.change_points = {config.length / 4, config.length / 2, 3 * config.length / 4};
    drift.transition_width = config.scenario == Scenario::Gradual ? config.drift_width : 0;
    const int concepts = family_concept_count(family);
    for (int i = 0; i < 4; ++i) drift.concept_sequence.push_back(i % concepts);
  }
  auto stream = std::make_unique<DriftStream>(family, std::move(drift), config.length,
                                              substream(master_seed, kTagGenerator));

  NoiseSpec noise = default_noise(family);
  if (config.noise_rate >= 0.0) noise.rate = config.noise_rate;
  if (noise.rate <= 0.0) return stream;
  return std::make_unique<NoisyStream>(std::move(stream), noise,
                                       substream(master_seed, kTagNoise));
}

std::unique_ptr<ActivePolicy> build_policy(std::shared_ptr<const Schema> schema,
                                           const ExperimentConfig& config,
                                           std::uint64_t master_seed) {
  const double budget = config.effective_budget();
  EnsembleConfig ensemble{config.n_learners, 0.005, 0.001, substream(master_seed, kTagEnsemble),
                          config.parallel_slots};
  switch (config.algorithm) {
    case Algorithm::FaseAl: {
      SplitState split{config.delta, budget, VarUncertaintyState{1.0, config.step}};
      return std::make_unique<FaseAl>(std::move(schema), ensemble, split,
                                      substream(master_seed, kTagStrategy));
    }
    case Algorithm::Fase:
      return std::make_unique<FaseSupervised>(std::move(schema), ensemble);
    case Algorithm::FixedUncertainty:
    case Algorithm::VarUncertainty:
    case Algorithm::RandUncertainty:
    case Algorithm::SelSampling: {
      BaselineKind kind;
      switch (config.algorithm) {
        case Algorithm::FixedUncertainty: kind = BaselineKind::FixedUncertainty; break;
        case Algorithm::VarUncertainty: kind = BaselineKind::VarUncertainty; break;
        case Algorithm::RandUncertainty: kind = BaselineKind::RandUncertainty; break;
        default: kind = BaselineKind::SelSampling; break;
      }
      BaselineParams params{config.fixed_threshold, config.step, 1.0};
      return std::make_unique<UncertaintyBaseline>(std::move(schema), kind, budget, params,
                                                   substream(master_seed, kTagStrategy));
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

RunRecord run_single(const ExperimentConfig& config, std::uint64_t seed) {
  const std::uint64_t master = seed + seed_base_from_env();
  auto stream = build_stream(config, master);
  auto schema = std::make_shared<const Schema>(stream->schema());
  schema->validate();
  auto policy = build_policy(schema, config, master);

  RunRecord record;
  record.dataset = config.scenario == Scenario::RealData
                       ? std::filesystem::path(config.dataset).stem().string()
                       : config.dataset;
  record.scenario = config.scenario;
  record.algorithm = config.algorithm;
  record.seed = seed;
  record.budget = config.effective_budget();
  record.result = run_prequential(*stream, *policy, config.length, config.effective_window(), seed);
  record.length = record.result.instances;
  return record;
}

std::string result_csv_header() {
  return "dataset,scenario,algorithm,seed,length,budget,accuracy,labeled_fraction,runtime_s\n";
}

std::string result_csv_row(const RunRecord& record) {
  std::string row;
  row += record.dataset;
  row += ',';
  row += scenario_name(record.scenario);
  row += ',';
  row += algorithm_name(record.algorithm);
  row += ',';
  row += std::to_string(record.seed);
  row += ',';
  row += std::to_string(record.length);
  row += ',';
  row += format_double(record.budget);
  row += ',';
  row += format_double(record.result.overall_accuracy);
  row += ',';
  row += format_double(record.result.labeled_fraction);
  row += ',';
  row += format_double(record.result.runtime_seconds);
  row += '\n';
  return row;
}

std::string curve_csv_header() { return "dataset,algorithm,seed,position,window_accuracy\n"; }

std::string curve_csv_rows(const RunRecord& record) {
  std::string rows;
  for (const auto& point : record.result.windowed_accuracy) {
    rows += record.dataset;
    rows += ',';
    rows += algorithm_name(record.algorithm);
    rows += ',';
    rows += std::to_string(record.seed);
    rows += ',';
    rows += std::to_string(point.position);
    rows += ',';
    rows += format_double(point.accuracy);
    rows += '\n';
  }
  return rows;
}

namespace {

double parse_cell_double(std::string_view cell, std::size_t line_no) {
  auto value = parse_double(cell);
  if (!value) throw ParseError(line_no, "expected a number, got '" + std::string(cell) + "'");
  return *value;
}

std::uint64_t parse_cell_u64(std::string_view cell, std::size_t line_no) {
  const double value = parse_cell_double(cell, line_no);
  if (value < 0) throw ParseError(line_no, "expected a non-negative integer");
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::vector<ResultRow> read_result_csv(const std::string& text) {
  std::vector<ResultRow> rows;
  std::size_t line_no = 0;
  bool headered = false;
  bool first_content = true;
  for (auto line : split(text, '\n')) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (first_content) {
      first_content = false;
      if (body.find("accuracy") != std::string_view::npos && !parse_double(split(body, ',')[0])) {
        headered = true;
        continue;
      }
    }
    auto cells = split(body, ',');
    ResultRow row;
    if (headered) {
      if (cells.size() != 9) {
        throw ParseError(line_no, "expected 9 columns, got " + std::to_string(cells.size()));
      }
      row.dataset = std::string(trim(cells[0]));
      row.scenario = std::string(trim(cells[1]));
      row.algorithm = std::string(trim(cells[2]));
      row.seed = parse_cell_u64(trim(cells[3]), line_no);
      row.length = parse_cell_u64(trim(cells[4]), line_no);
      row.budget = parse_cell_double(trim(cells[5]), line_no);
      row.accuracy = parse_cell_double(trim(cells[6]), line_no);
      row.labeled_fraction = parse_cell_double(trim(cells[7]), line_no);
      row.runtime_s = parse_cell_double(trim(cells[8]), line_no);
    } else {
      if (cells.size() != 1) {
        throw ParseError(line_no, "expected one value per line in a bare numeric list");
      }
      row.accuracy = parse_cell_double(trim(cells[0]), line_no);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t seed_base_from_env() {
  const char* raw = std::getenv("DRIFTSTREAM_SEED_BASE");
  if (!raw || !*raw) return 0;
  auto value = parse_double(raw);
  if (!value || *value < 0) {
    throw std::invalid_argument("DRIFTSTREAM_SEED_BASE must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(*value);
}

}  // namespace driftstream
