#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "driftstream/policy.hpp"
#include "driftstream/stream.hpp"

namespace driftstream {

struct WindowPoint {
  std::uint64_t position = 0;  // 1-based index of the window's last instance
  double accuracy = 0.0;

  bool operator==(const WindowPoint&) const = default;
};

struct PrequentialResult {
  double overall_accuracy = 0.0;
  std::vector<WindowPoint> windowed_accuracy;
  double labeled_fraction = 0.0;
  double runtime_seconds = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t labeled = 0;
};

/// Window used for accuracy curves when none is requested: coarse enough to
/// keep million-instance curves readable, never below 100 instances.
std::uint64_t auto_window(std::uint64_t length);

/// Runs test-then-train over at most `length` instances (0 = until the
/// stream ends): each instance is scored against ground truth held by the
/// harness, then handed to the policy with its label hidden; the policy buys
/// labels through the oracle. The windowed series has one point per full
/// `window` instances. Runtime covers only the policy's work, not stream
/// generation. Component errors abort the run, wrapped with the instance
/// position.
PrequentialResult run_prequential(InstanceSource& stream, ActivePolicy& policy,
                                  std::uint64_t length, std::uint64_t window,
                                  std::uint64_t seed = 0);

/// Arithmetic means over runs. Throws EmptyInputError when empty.
std::pair<double, double> aggregate_runs(const std::vector<PrequentialResult>& results);

}  // namespace driftstream
