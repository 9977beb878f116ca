#pragma once

#include <cstdint>

namespace driftstream {

enum class DriftStatus { InControl, Warning, Drift };

/// One-sample Hoeffding deviation bound: sqrt(ln(1/alpha) / (2n)).
/// Throws std::invalid_argument for n < 1 or alpha outside (0, 1).
double hoeffding_bound(std::uint64_t n, double alpha);

/// Two-sample bound for comparing a reference mean over n values against a
/// recent mean over m values: sqrt(ln(1/alpha) * (1/n + 1/m) / 2).
double two_sample_bound(std::uint64_t n, std::uint64_t m, double alpha);

/// Drift detector over a stream of 0/1 errors, built on Hoeffding bounds
/// over running averages.
///
/// The detector keeps the totals of everything seen since its last reset and
/// a "cut" snapshot: the prefix whose mean-plus-bound was lowest so far. Each
/// update compares the overall mean against the cut mean; one-sided, so
/// only an error-rate increase can signal. Exceeding the two-sample bound at
/// alpha_drift raises Drift and resets all state; exceeding it at
/// alpha_warning raises Warning. A Warning is sticky: it is reported until
/// either a Drift fires or 100 consecutive in-control evaluations pass.
class HddmDetector {
 public:
  static constexpr int kWarningExitRun = 100;

  explicit HddmDetector(double alpha_warning = 0.005, double alpha_drift = 0.001);

  /// Feed one error flag (0 = correct, 1 = error). Returns the status of
  /// this update. A Drift return means the internal state has already been
  /// reset to that of a fresh detector.
  DriftStatus update(int error);

  /// Status reported by the most recent update; fresh detectors are
  /// InControl.
  DriftStatus status() const { return status_; }

  void reset();

  std::uint64_t samples() const { return n_; }
  double mean() const { return n_ ? sum_ / static_cast<double>(n_) : 0.0; }
  std::uint64_t cut_samples() const { return cut_n_; }
  double alpha_warning() const { return alpha_warning_; }
  double alpha_drift() const { return alpha_drift_; }

  bool operator==(const HddmDetector&) const = default;

 private:
  double alpha_warning_;
  double alpha_drift_;
  std::uint64_t n_ = 0;
  double sum_ = 0.0;
  std::uint64_t cut_n_ = 0;
  double cut_sum_ = 0.0;
  DriftStatus status_ = DriftStatus::InControl;
  int in_control_run_ = 0;
};

}  // namespace driftstream
