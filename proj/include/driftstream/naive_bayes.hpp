#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "driftstream/instance.hpp"
#include "driftstream/schema.hpp"

namespace driftstream {

/// Index of the largest element; ties resolve to the lowest index.
inline int argmax_index(std::span<const double> v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

/// Running per-class Gaussian in Welford form.
struct GaussianStat {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  double variance() const { return count > 0 ? m2 / static_cast<double>(count) : 0.0; }

  bool operator==(const GaussianStat&) const = default;
};

/// Incremental Naive Bayes over a fixed schema.
///
/// Class priors and nominal likelihoods use add-one smoothing; numeric
/// attributes get one Gaussian per class with a variance floor so constant
/// attributes never produce a singular density. Posterior math runs in log
/// space with a max shift before exponentiation. Missing attribute values
/// are skipped symmetrically in learning and prediction. A model that has
/// seen nothing predicts the uniform distribution.
///
/// Learning a single instance costs O(#attributes); prediction costs
/// O(#attributes * #classes). Counters are order-independent, so any
/// interleaving of the same multiset of labeled instances yields the same
/// model. Concurrent reads are safe; writes need external exclusivity.
class NaiveBayes {
 public:
  static constexpr double kVarianceFloor = 1e-9;

  explicit NaiveBayes(std::shared_ptr<const Schema> schema);

  void learn(const Instance& instance, int class_index);

  /// Posterior over classes; entries are >= 0 and sum to 1 (within 1e-9).
  std::vector<double> predict_proba(const Instance& instance) const;

  /// Argmax of predict_proba with lowest-index tie-breaking.
  int predict(const Instance& instance) const;

  std::uint64_t total_seen() const { return total_seen_; }
  const Schema& schema() const { return *schema_; }
  const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
  const std::vector<std::int64_t>& class_counts() const { return class_counts_; }

  std::int64_t nominal_count(int cls, std::size_t attr, int value) const;
  /// Non-missing observations of `attr` within class `cls`.
  std::int64_t observed_count(int cls, std::size_t attr) const;
  const GaussianStat& gaussian(int cls, std::size_t attr) const;

  /// Same schema contents (not necessarily the same schema object) and the
  /// same learned state.
  bool operator==(const NaiveBayes& other) const;

 private:
  void check_instance(const Instance& instance) const;

  std::shared_ptr<const Schema> schema_;
  std::uint64_t total_seen_ = 0;
  std::vector<std::int64_t> class_counts_;

  // Per-attribute dispatch: slot index into the nominal or numeric tables,
  // -1 for the other kind.
  std::vector<int> nominal_slot_;
  std::vector<int> numeric_slot_;
  std::vector<int> value_offset_;  // per nominal slot, offset into a class row
  std::vector<int> value_count_;   // per nominal slot
  int values_per_class_ = 0;
  std::vector<std::int64_t> nominal_counts_;  // [class][value_offset + value]
  std::vector<std::int64_t> observed_;        // [class][nominal slot]
  std::vector<GaussianStat> gauss_;           // [class][numeric slot]
  int nominal_attr_count_ = 0;
  int numeric_attr_count_ = 0;
};

}  // namespace driftstream
