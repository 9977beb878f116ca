#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace driftstream {

struct WilcoxonResult {
  double w = 0.0;            // min of the signed rank sums
  double w_plus = 0.0;       // rank sum of positive differences (a > b)
  double w_minus = 0.0;      // rank sum of negative differences
  double p_two_sided = 1.0;
  double p_one_sided = 1.0;  // alternative: a tends to exceed b
  std::size_t n_used = 0;    // non-zero differences that entered the test
  std::size_t zeros_dropped = 0;
  bool exact = false;        // enumeration (n <= 20) vs. normal approximation
  bool significant = false;  // two-sided p < 0.05

  bool operator==(const WilcoxonResult&) const = default;
};

/// Wilcoxon signed-rank test on paired samples (a_i, b_i). Differences of
/// zero are dropped; ties in |difference| get average ranks. For up to 20
/// usable pairs the p-values come from exact enumeration of the sign
/// distribution; beyond that from the normal approximation with continuity
/// and tie corrections. `force_normal` applies the approximation regardless
/// of n (used to cross-check the two branches). Throws TooFewPairsError when
/// fewer than 5 non-zero differences remain.
WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> paired,
                                    bool force_normal = false);

}  // namespace driftstream
