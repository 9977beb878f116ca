#include "driftstream/prequential.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "driftstream/errors.hpp"
#include "driftstream/oracle.hpp"

namespace driftstream {

std::uint64_t auto_window(std::uint64_t length) {
  if (length >= 1'000'000) return 10'000;
  std::uint64_t w = length / 100;
  return w < 100 ? 100 : w;
}

PrequentialResult run_prequential(InstanceSource& stream, ActivePolicy& policy,
                                  std::uint64_t length, std::uint64_t window,
                                  std::uint64_t seed) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");

  using Clock = std::chrono::steady_clock;
  LabelOracle oracle(&stream);
  PrequentialResult result;
  result.seed = seed;

  std::uint64_t correct = 0;
  std::uint64_t window_correct = 0;
  std::uint64_t in_window = 0;
  std::chrono::nanoseconds spent{0};

  while (length == 0 || result.instances < length) {
    auto pulled = stream.next();
    if (!pulled) break;
    Instance masked = std::move(*pulled);
    const int truth = masked.true_class;
    masked.visible_class.reset();

    StepResult step;
    const auto started = Clock::now();
    try {
      step = policy.step(masked, oracle);
    } catch (const std::exception& e) {
      throw std::runtime_error("instance " + std::to_string(result.instances + 1) + ": " +
                               e.what());
    }
    spent += Clock::now() - started;

    ++result.instances;
    if (step.predicted == truth) {
      ++correct;
      ++window_correct;
    }
    if (step.labeled) ++result.labeled;
    if (++in_window == window) {
      result.windowed_accuracy.push_back(
          {result.instances, static_cast<double>(window_correct) / static_cast<double>(window)});
      window_correct = 0;
      in_window = 0;
    }
  }

  if (result.instances > 0) {
    result.overall_accuracy = static_cast<double>(correct) / static_cast<double>(result.instances);
    result.labeled_fraction =
        static_cast<double>(result.labeled) / static_cast<double>(result.instances);
  }
  result.runtime_seconds = std::chrono::duration<double>(spent).count();
  return result;
}

std::pair<double, double> aggregate_runs(const std::vector<PrequentialResult>& results) {
  if (results.empty()) throw EmptyInputError("no runs to aggregate");
  double accuracy = 0.0;
  double runtime = 0.0;
  for (const auto& r : results) {
    accuracy += r.overall_accuracy;
    runtime += r.runtime_seconds;
  }
  const double n = static_cast<double>(results.size());
  return {accuracy / n, runtime / n};
}

}  // namespace driftstream
