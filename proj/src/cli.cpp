#include "driftstream/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "driftstream/arff.hpp"
#include "driftstream/csv.hpp"
#include "driftstream/errors.hpp"
#include "driftstream/experiment.hpp"
#include "driftstream/text.hpp"
#include "driftstream/wilcoxon.hpp"

namespace driftstream {

namespace {

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    file << content;
    if (!file) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

bool looks_like_file(const std::string& dataset) {
  return dataset.ends_with(".arff") || dataset.ends_with(".csv");
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Display form for report lines; result CSVs keep full round-trip precision.
std::string compact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- run -----------------------------------------------------------------

struct RunFlags {
  ExperimentConfig config;
  std::string scenario = "nodrift";
  std::string algorithm = "fase_al";
  std::string out_file;
  std::string curve_file;
};

void add_model_flags(CLI::App* cmd, ExperimentConfig& config) {
  cmd->add_option("--budget", config.budget,
                  "Labeling budget in [0,1]; negative picks the algorithm default "
                  "(0.05 ensemble, 0.1 baselines)");
  cmd->add_option("--delta", config.delta, "Random-branch share of the split strategy")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--step", config.step, "Threshold step of the variable strategies")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--threshold", config.fixed_threshold,
                  "Certainty bar of the fixed-uncertainty baseline")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--n-learners", config.n_learners, "Base learners in the ensemble")
      ->check(CLI::Range(1, 1000));
  cmd->add_flag("--parallel", config.parallel_slots,
                "Run ensemble slots across threads (same results, more cores)");
}

void add_stream_flags(CLI::App* cmd, ExperimentConfig& config) {
  cmd->add_option("--length", config.length, "Instances to process (0 = whole file)");
  cmd->add_option("--noise", config.noise_rate,
                  "Noise rate; negative picks the dataset default (0.1, stagger 0)");
  cmd->add_option("--drift-width", config.drift_width,
                  "Transition width of gradual drifts, in instances");
  cmd->add_option("--class-column", config.class_column,
                  "Class column of a CSV file (default: last)");
}

int cmd_run(const RunFlags& flags, std::ostream& out) {
  ExperimentConfig config = flags.config;
  config.scenario = parse_scenario(flags.scenario);
  config.algorithm = parse_algorithm(flags.algorithm);
  if (looks_like_file(config.dataset)) {
    config.scenario = Scenario::RealData;
  } else {
    (void)parse_family(config.dataset);  // reject unknown names before running
  }
  if (config.budget > 1.0) throw std::invalid_argument("--budget must be at most 1");

  std::vector<RunRecord> records;
  records.reserve(config.seeds.size());
  for (std::uint64_t seed : config.seeds) records.push_back(run_single(config, seed));

  std::string results = result_csv_header();
  for (const auto& record : records) results += result_csv_row(record);
  if (flags.out_file.empty()) {
    out << results;
  } else {
    write_file_atomic(flags.out_file, results);
  }
  if (!flags.curve_file.empty()) {
    std::string curves = curve_csv_header();
    for (const auto& record : records) curves += curve_csv_rows(record);
    write_file_atomic(flags.curve_file, curves);
  }
  return 0;
}

// --- paper ---------------------------------------------------------------

struct PaperFlags {
  double scale = 1.0;
  int seed_count = 10;
  int jobs = 0;
  std::string out_dir = "paper_out";
  std::vector<std::string> real_files;
  bool parallel_slots = false;
};

struct PaperJob {
  ExperimentConfig config;
  std::uint64_t seed = 0;
};

std::string curve_file_name(const RunRecord& record) {
  return record.dataset + "_" + std::string(scenario_name(record.scenario)) + "_" +
         std::string(algorithm_name(record.algorithm)) + "_seed" + std::to_string(record.seed) +
         ".csv";
}

void print_summary_table(std::ostream& out, const std::vector<RunRecord>& records,
                         Scenario scenario, const std::vector<std::string>& datasets) {
  constexpr int kCell = 15;
  out << "scenario: " << scenario_name(scenario) << "\n";
  out << std::string(14, ' ');
  for (const auto& dataset : datasets) {
    out << dataset << std::string(dataset.size() < kCell ? kCell - dataset.size() : 1, ' ');
  }
  out << "\n";
  for (Algorithm algorithm : {Algorithm::FaseAl, Algorithm::FixedUncertainty,
                              Algorithm::VarUncertainty, Algorithm::RandUncertainty,
                              Algorithm::SelSampling}) {
    const std::string name(algorithm_name(algorithm));
    out << name << std::string(name.size() < 14 ? 14 - name.size() : 1, ' ');
    for (const auto& dataset : datasets) {
      double accuracy = 0.0;
      double runtime = 0.0;
      int n = 0;
      for (const auto& record : records) {
        if (record.scenario == scenario && record.algorithm == algorithm &&
            record.dataset == dataset) {
          accuracy += record.result.overall_accuracy;
          runtime += record.result.runtime_seconds;
          ++n;
        }
      }
      std::string cell = n ? fixed2(100.0 * accuracy / n) + " " + fixed2(runtime / n) : "-";
      out << cell << std::string(cell.size() < kCell ? kCell - cell.size() : 1, ' ');
    }
    out << "\n";
  }
  out << "\n";
}

int cmd_paper(const PaperFlags& flags, std::ostream& out) {
  if (flags.scale <= 0.0 || flags.scale > 1.0) {
    throw std::invalid_argument("--scale must be in (0, 1]");
  }
  if (flags.seed_count < 1) throw std::invalid_argument("--seeds must be at least 1");

  const auto length = static_cast<std::uint64_t>(std::llround(1'000'000.0 * flags.scale));
  const auto width =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(1000.0 * flags.scale)));
  const std::vector<std::string> datasets = {"sea", "stagger", "led", "agrawal", "hyperplane"};
  const std::vector<Scenario> scenarios = {Scenario::NoDrift, Scenario::Abrupt, Scenario::Gradual};
  const std::vector<Algorithm> algorithms = {Algorithm::FaseAl, Algorithm::FixedUncertainty,
                                             Algorithm::VarUncertainty, Algorithm::RandUncertainty,
                                             Algorithm::SelSampling};

  std::vector<PaperJob> jobs;
  for (const auto& dataset : datasets) {
    for (Scenario scenario : scenarios) {
      for (Algorithm algorithm : algorithms) {
        for (int seed = 1; seed <= flags.seed_count; ++seed) {
          ExperimentConfig config;
          config.dataset = dataset;
          config.scenario = scenario;
          config.algorithm = algorithm;
          config.length = length;
          config.drift_width = width;
          config.parallel_slots = flags.parallel_slots;
          jobs.push_back({std::move(config), static_cast<std::uint64_t>(seed)});
        }
      }
    }
  }
  for (const auto& file : flags.real_files) {
    for (Algorithm algorithm : algorithms) {
      for (int seed = 1; seed <= flags.seed_count; ++seed) {
        ExperimentConfig config;
        config.dataset = file;
        config.scenario = Scenario::RealData;
        config.algorithm = algorithm;
        config.length = 0;
        config.parallel_slots = flags.parallel_slots;
        jobs.push_back({std::move(config), static_cast<std::uint64_t>(seed)});
      }
    }
  }

  const std::filesystem::path out_dir(flags.out_dir);
  std::filesystem::create_directories(out_dir / "curves");

  std::vector<RunRecord> records(jobs.size());
  std::vector<std::string> failures(jobs.size());
  int workers = flags.jobs;
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw ? static_cast<int>(hw) : 1;
  }
  const int total = static_cast<int>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (int i = 0; i < total; ++i) {
    try {
      RunRecord record = run_single(jobs[static_cast<std::size_t>(i)].config,
                                    jobs[static_cast<std::size_t>(i)].seed);
      write_file_atomic(out_dir / "curves" / curve_file_name(record),
                        curve_csv_header() + curve_csv_rows(record));
      records[static_cast<std::size_t>(i)] = std::move(record);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i].empty()) {
      throw std::runtime_error("run " + std::string(algorithm_name(jobs[i].config.algorithm)) +
                               " on " + jobs[i].config.dataset + " seed " +
                               std::to_string(jobs[i].seed) + " failed: " + failures[i]);
    }
  }

  std::string results = result_csv_header();
  for (const auto& record : records) results += result_csv_row(record);
  write_file_atomic(out_dir / "results.csv", results);

  out << "length " << length << ", " << flags.seed_count << " seeds, " << records.size()
      << " runs -> " << (out_dir / "results.csv").string() << "\n\n";
  for (Scenario scenario : scenarios) print_summary_table(out, records, scenario, datasets);
  if (!flags.real_files.empty()) {
    std::vector<std::string> names;
    names.reserve(flags.real_files.size());
    for (const auto& file : flags.real_files) {
      names.push_back(std::filesystem::path(file).stem().string());
    }
    print_summary_table(out, records, Scenario::RealData, names);
  }
  return 0;
}

// --- compare ---------------------------------------------------------------

struct CompareFlags {
  std::string file_a;
  std::string file_b;
  std::string metric = "accuracy";
};

double metric_of(const ResultRow& row, const std::string& metric) {
  if (metric == "accuracy") return row.accuracy;
  if (metric == "labeled_fraction") return row.labeled_fraction;
  if (metric == "runtime_s") return row.runtime_s;
  throw std::invalid_argument("unknown metric: " + metric);
}

std::string pair_key(const ResultRow& row) {
  return row.dataset + "|" + row.scenario + "|" + std::to_string(row.seed);
}

int cmd_compare(const CompareFlags& flags, std::ostream& out) {
  auto rows_a = read_result_csv(read_file(flags.file_a));
  auto rows_b = read_result_csv(read_file(flags.file_b));
  if (rows_a.empty() || rows_b.empty()) throw std::runtime_error("no data rows to compare");

  std::vector<std::pair<double, double>> paired;
  std::map<std::string, double> keyed_b;
  bool keyed = !rows_a.front().dataset.empty() && !rows_b.front().dataset.empty();
  if (keyed) {
    for (const auto& row : rows_b) keyed_b.emplace(pair_key(row), metric_of(row, flags.metric));
    keyed = keyed_b.size() == rows_b.size();
  }
  if (keyed) {
    for (const auto& row : rows_a) {
      auto it = keyed_b.find(pair_key(row));
      if (it == keyed_b.end()) {
        keyed = false;
        break;
      }
      paired.emplace_back(metric_of(row, flags.metric), it->second);
    }
    if (keyed && paired.size() != rows_b.size()) keyed = false;
  }
  if (!keyed) {
    // No usable common keys: fall back to pairing by row order.
    if (rows_a.size() != rows_b.size()) {
      throw std::runtime_error("row counts differ (" + std::to_string(rows_a.size()) + " vs " +
                               std::to_string(rows_b.size()) + ") and rows cannot be keyed");
    }
    paired.clear();
    for (std::size_t i = 0; i < rows_a.size(); ++i) {
      paired.emplace_back(metric_of(rows_a[i], flags.metric),
                          metric_of(rows_b[i], flags.metric));
    }
  }

  const auto result = wilcoxon_signed_rank(paired);
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (const auto& [a, b] : paired) {
    mean_a += a;
    mean_b += b;
  }
  mean_a /= static_cast<double>(paired.size());
  mean_b /= static_cast<double>(paired.size());

  out << "metric: " << flags.metric << ", pairs: " << paired.size() << " ("
      << result.zeros_dropped << " zero differences dropped, " << (keyed ? "keyed" : "row-order")
      << " pairing)\n";
  out << "mean A = " << compact(mean_a) << ", mean B = " << compact(mean_b) << "\n";
  out << "W = " << compact(result.w) << " (W+ = " << compact(result.w_plus)
      << ", W- = " << compact(result.w_minus) << ", "
      << (result.exact ? "exact" : "normal approximation") << ")\n";
  out << "two-sided p = " << compact(result.p_two_sided)
      << (result.significant ? "  -> significant at 0.05" : "  -> not significant at 0.05")
      << "\n";
  out << "one-sided p (A > B) = " << compact(result.p_one_sided)
      << (result.p_one_sided < 0.05 ? "  -> significant at 0.05" : "  -> not significant at 0.05")
      << "\n";
  return 0;
}

// --- generate ----------------------------------------------------------------

struct GenerateFlags {
  ExperimentConfig config;
  std::string scenario = "nodrift";
  std::uint64_t seed = 1;
  std::string format;
  std::string out_file;
};

int cmd_generate(const GenerateFlags& flags, std::ostream& out) {
  ExperimentConfig config = flags.config;
  config.scenario = parse_scenario(flags.scenario);
  if (config.scenario == Scenario::RealData) {
    throw std::invalid_argument("generate needs a synthetic dataset");
  }
  (void)parse_family(config.dataset);

  std::string format = flags.format;
  if (format.empty()) {
    format = flags.out_file.ends_with(".csv") ? "csv" : "arff";
  }
  if (format != "arff" && format != "csv") {
    throw std::invalid_argument("--format must be arff or csv");
  }

  auto stream = build_stream(config, flags.seed + seed_base_from_env());
  std::ostringstream text;
  if (format == "arff") {
    write_arff(text, stream->schema(), *stream, 0, config.dataset);
  } else {
    write_csv(text, stream->schema(), *stream, 0);
  }
  if (flags.out_file.empty()) {
    out << text.str();
  } else {
    write_file_atomic(flags.out_file, text.str());
  }
  return 0;
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming active-learning experiments: drifting stream generators, an "
               "ensemble learner under a label budget, reference strategies, and a "
               "prequential evaluation harness"};
  app.require_subcommand(0, 1);
  // Config files are handled by the top-level parser, so subcommand options
  // live in an ini section named after the subcommand ([run], [paper], ...).
  app.set_config("--config", "",
                 "Read option defaults from an ini file (one [section] per subcommand)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunFlags run_flags;
  run_flags.config.length = 1'000'000;
  auto* run_cmd = app.add_subcommand("run", "One experiment, result CSV to stdout or files");
  run_cmd->fallthrough();
  run_cmd->add_option("--dataset", run_flags.config.dataset,
                      "sea|stagger|led|agrawal|hyperplane, or an .arff/.csv file");
  run_cmd->add_option("--scenario", run_flags.scenario, "nodrift|abrupt|gradual|real");
  run_cmd->add_option("--algorithm", run_flags.algorithm,
                      "fase_al|fase|fixed|variable|random_var|sel_sampling");
  run_cmd->add_option("--seed", run_flags.config.seeds, "Seeds to run (repeatable)")
      ->delimiter(',');
  run_cmd->add_option("--window", run_flags.config.window,
                      "Accuracy-curve window (0 = pick from length)");
  add_stream_flags(run_cmd, run_flags.config);
  add_model_flags(run_cmd, run_flags.config);
  run_cmd->add_option("--out", run_flags.out_file, "Write the result CSV here (atomically)");
  run_cmd->add_option("--curve", run_flags.curve_file, "Write the windowed-accuracy CSV here");

  PaperFlags paper_flags;
  auto* paper_cmd = app.add_subcommand(
      "paper", "The full grid: 5 synthetic datasets x 3 scenarios x 5 algorithms");
  paper_cmd->fallthrough();
  paper_cmd->add_option("--scale", paper_flags.scale,
                        "Shrink streams and change points proportionally (1 = a million "
                        "instances per run)");
  paper_cmd->add_option("--seeds", paper_flags.seed_count, "Seeds per cell, running 1..N");
  paper_cmd->add_option("--jobs", paper_flags.jobs, "Worker threads (0 = all cores)");
  paper_cmd->add_option("--out-dir", paper_flags.out_dir, "Directory for results and curves");
  paper_cmd->add_option("--real", paper_flags.real_files,
                        "Real dataset file(s) to include (repeatable)");
  paper_cmd->add_flag("--parallel", paper_flags.parallel_slots,
                      "Thread the ensemble slots inside each run as well");

  CompareFlags compare_flags;
  auto* compare_cmd =
      app.add_subcommand("compare", "Wilcoxon signed-rank test over two result CSVs");
  compare_cmd->add_option("file_a", compare_flags.file_a, "First result CSV (or numeric list)")
      ->required();
  compare_cmd->add_option("file_b", compare_flags.file_b, "Second result CSV (or numeric list)")
      ->required();
  compare_cmd->add_option("--metric", compare_flags.metric,
                          "accuracy|labeled_fraction|runtime_s");

  GenerateFlags generate_flags;
  generate_flags.config.length = 1000;
  auto* generate_cmd =
      app.add_subcommand("generate", "Dump a synthetic stream as ARFF or CSV");
  generate_cmd->fallthrough();
  generate_cmd->add_option("--dataset", generate_flags.config.dataset,
                           "sea|stagger|led|agrawal|hyperplane");
  generate_cmd->add_option("--scenario", generate_flags.scenario, "nodrift|abrupt|gradual");
  generate_cmd->add_option("--seed", generate_flags.seed, "Stream seed");
  generate_cmd->add_option("--format", generate_flags.format,
                           "arff|csv (default: from --out extension, else arff)");
  generate_cmd->add_option("--out", generate_flags.out_file, "Write here instead of stdout");
  add_stream_flags(generate_cmd, generate_flags.config);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (app.got_subcommand(run_cmd)) return cmd_run(run_flags, out);
    if (app.got_subcommand(paper_cmd)) return cmd_paper(paper_flags, out);
    if (app.got_subcommand(compare_cmd)) return cmd_compare(compare_flags, out);
    if (app.got_subcommand(generate_cmd)) return cmd_generate(generate_flags, out);
    out << app.help();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n(see --help for usage)\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_command(std::vector<std::string> args) {
  return run_command(std::move(args), std::cout, std::cerr);
}

}  // namespace driftstream
