#include "driftstream/hddm.hpp"

#include <cmath>
#include <stdexcept>

namespace driftstream {

double hoeffding_bound(std::uint64_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
  return std::sqrt(std::log(1.0 / alpha) / (2.0 * static_cast<double>(n)));
}

double two_sample_bound(std::uint64_t n, std::uint64_t m, double alpha) {
  if (n < 1 || m < 1) throw std::invalid_argument("sample counts must be positive");
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
  return std::sqrt(std::log(1.0 / alpha) *
                   (1.0 / static_cast<double>(n) + 1.0 / static_cast<double>(m)) / 2.0);
}

HddmDetector::HddmDetector(double alpha_warning, double alpha_drift)
    : alpha_warning_(alpha_warning), alpha_drift_(alpha_drift) {
  if (!(alpha_warning > 0.0) || !(alpha_warning < 1.0) || !(alpha_drift > 0.0) ||
      !(alpha_drift < 1.0)) {
    throw std::invalid_argument("alphas must be in (0, 1)");
  }
  if (alpha_drift > alpha_warning)
    throw std::invalid_argument("alpha_drift must not exceed alpha_warning");
}

void HddmDetector::reset() {
  n_ = 0;
  sum_ = 0.0;
  cut_n_ = 0;
  cut_sum_ = 0.0;
  status_ = DriftStatus::InControl;
  in_control_run_ = 0;
}

DriftStatus HddmDetector::update(int error) {
  ++n_;
  sum_ += error;
  const double mean = sum_ / static_cast<double>(n_);

  // Track the prefix with the lowest mean-plus-bound seen so far.
  if (cut_n_ == 0 || mean + hoeffding_bound(n_, alpha_warning_) <=
                         cut_sum_ / static_cast<double>(cut_n_) +
                             hoeffding_bound(cut_n_, alpha_warning_)) {
    cut_n_ = n_;
    cut_sum_ = sum_;
  }

  DriftStatus raw = DriftStatus::InControl;
  if (cut_n_ < n_) {
    // Compare the overall mean against the cut minimum.  Testing the overall
    // mean (rather than the bare suffix) damps transient suffix noise, which
    // keeps the false-positive rate down under repeated testing.
    const double cut_mean = cut_sum_ / static_cast<double>(cut_n_);
    const double diff = mean - cut_mean;
    if (diff >= two_sample_bound(cut_n_, n_, alpha_drift_)) {
      raw = DriftStatus::Drift;
    } else if (diff >= two_sample_bound(cut_n_, n_, alpha_warning_)) {
      raw = DriftStatus::Warning;
    }
  }

  if (raw == DriftStatus::Drift) {
    reset();
    return DriftStatus::Drift;
  }
  if (raw == DriftStatus::Warning) {
    status_ = DriftStatus::Warning;
    in_control_run_ = 0;
    return status_;
  }
  if (status_ == DriftStatus::Warning) {
    // Hysteresis: hold the warning until a long quiet run.
    if (++in_control_run_ >= kWarningExitRun) {
      status_ = DriftStatus::InControl;
      in_control_run_ = 0;
    }
    return status_;
  }
  status_ = DriftStatus::InControl;
  return status_;
}

}  // namespace driftstream
