#include "driftstream/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "driftstream/errors.hpp"

namespace driftstream {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Exact null CDF of the signed-rank sum: P(S <= w) with ranks possibly
// half-integral (ties), so everything is counted over doubled ranks, which
// are always whole numbers summing to n(n+1).
double exact_cdf(const std::vector<double>& ranks, double w) {
  const std::size_t n = ranks.size();
  const std::size_t total = n * (n + 1);
  std::vector<double> ways(total + 1, 0.0);
  ways[0] = 1.0;
  std::size_t reach = 0;
  for (double rank : ranks) {
    const auto doubled = static_cast<std::size_t>(std::llround(2.0 * rank));
    for (std::size_t s = reach + 1; s-- > 0;) {
      if (ways[s] > 0.0 && s + doubled <= total) ways[s + doubled] += ways[s];
    }
    reach += doubled;
  }
  const auto cap = static_cast<long long>(std::llround(2.0 * w));
  double below = 0.0;
  for (std::size_t s = 0; s <= total && static_cast<long long>(s) <= cap; ++s) below += ways[s];
  return below / std::pow(2.0, static_cast<double>(n));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> paired,
                                    bool force_normal) {
  std::vector<double> diffs;
  std::size_t zeros = 0;
  for (const auto& [a, b] : paired) {
    const double d = a - b;
    if (d == 0.0) {
      ++zeros;
    } else {
      diffs.push_back(d);
    }
  }
  if (diffs.size() < 5) throw TooFewPairsError(diffs.size());

  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::fabs(diffs[i]) < std::fabs(diffs[j]);
  });

  // Average ranks across runs of equal |difference|; remember the run sizes
  // for the tie correction of the normal branch.
  std::vector<double> ranks(n, 0.0);
  std::vector<std::size_t> tie_sizes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && std::fabs(diffs[order[j]]) == std::fabs(diffs[order[i]])) ++j;
    const double shared = static_cast<double>(i + 1 + j) / 2.0;  // mean of i+1 .. j
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    tie_sizes.push_back(j - i);
    i = j;
  }

  WilcoxonResult result;
  result.n_used = n;
  result.zeros_dropped = zeros;
  for (std::size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0.0) {
      result.w_plus += ranks[i];
    } else {
      result.w_minus += ranks[i];
    }
  }
  result.w = std::min(result.w_plus, result.w_minus);

  if (!force_normal && n <= 20) {
    std::vector<double> sorted_ranks(n);
    for (std::size_t i = 0; i < n; ++i) sorted_ranks[i] = ranks[order[i]];
    result.exact = true;
    result.p_two_sided = std::min(1.0, 2.0 * exact_cdf(sorted_ranks, result.w));
    result.p_one_sided = exact_cdf(sorted_ranks, result.w_minus);
  } else {
    const double nd = static_cast<double>(n);
    const double mean = nd * (nd + 1.0) / 4.0;
    double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0;
    for (std::size_t t : tie_sizes) {
      const double td = static_cast<double>(t);
      variance -= (td * td * td - td) / 48.0;
    }
    const double sigma = std::sqrt(variance);
    result.exact = false;
    result.p_two_sided = std::min(1.0, 2.0 * normal_cdf((result.w + 0.5 - mean) / sigma));
    result.p_one_sided = normal_cdf((result.w_minus + 0.5 - mean) / sigma);
  }
  result.significant = result.p_two_sided < 0.05;
  return result;
}

}  // namespace driftstream
