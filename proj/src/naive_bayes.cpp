#include "driftstream/naive_bayes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace driftstream {

NaiveBayes::NaiveBayes(std::shared_ptr<const Schema> schema) : schema_(std::move(schema)) {
  if (!schema_) throw std::invalid_argument("null schema");
  schema_->validate();
  const std::size_t n_attrs = schema_->attribute_count();
  const int k = schema_->class_count();
  class_counts_.assign(k, 0);
  nominal_slot_.assign(n_attrs, -1);
  numeric_slot_.assign(n_attrs, -1);
  for (std::size_t a = 0; a < n_attrs; ++a) {
    const AttributeSpec& spec = schema_->attributes[a];
    if (spec.is_nominal()) {
      nominal_slot_[a] = nominal_attr_count_++;
      value_offset_.push_back(values_per_class_);
      value_count_.push_back(static_cast<int>(spec.values.size()));
      values_per_class_ += static_cast<int>(spec.values.size());
    } else {
      numeric_slot_[a] = numeric_attr_count_++;
    }
  }
  nominal_counts_.assign(static_cast<std::size_t>(k) * values_per_class_, 0);
  observed_.assign(static_cast<std::size_t>(k) * nominal_attr_count_, 0);
  gauss_.assign(static_cast<std::size_t>(k) * numeric_attr_count_, GaussianStat{});
}

void NaiveBayes::check_instance(const Instance& instance) const {
  if (instance.values.size() != schema_->attribute_count())
    throw std::invalid_argument("instance arity does not match schema");
}

void NaiveBayes::learn(const Instance& instance, int class_index) {
  check_instance(instance);
  if (class_index < 0 || class_index >= schema_->class_count())
    throw std::invalid_argument("class index out of range");
  ++total_seen_;
  ++class_counts_[class_index];
  for (std::size_t a = 0; a < instance.values.size(); ++a) {
    if (instance.is_missing(a)) continue;
    if (int slot = nominal_slot_[a]; slot >= 0) {
      int v = instance.nominal(a);
      if (v < 0 || v >= value_count_[slot])
        throw std::invalid_argument("nominal value index out of range");
      ++nominal_counts_[static_cast<std::size_t>(class_index) * values_per_class_ +
                        value_offset_[slot] + v];
      ++observed_[static_cast<std::size_t>(class_index) * nominal_attr_count_ + slot];
    } else {
      gauss_[static_cast<std::size_t>(class_index) * numeric_attr_count_ + numeric_slot_[a]].add(
          instance.values[a]);
    }
  }
}

std::vector<double> NaiveBayes::predict_proba(const Instance& instance) const {
  check_instance(instance);
  const int k = schema_->class_count();
  std::vector<double> score(k);
  const double denom = static_cast<double>(total_seen_) + k;
  for (int c = 0; c < k; ++c) {
    score[c] = std::log((static_cast<double>(class_counts_[c]) + 1.0) / denom);
  }
  for (std::size_t a = 0; a < instance.values.size(); ++a) {
    if (instance.is_missing(a)) continue;
    if (int slot = nominal_slot_[a]; slot >= 0) {
      int v = instance.nominal(a);
      if (v < 0 || v >= value_count_[slot])
        throw std::invalid_argument("nominal value index out of range");
      for (int c = 0; c < k; ++c) {
        std::int64_t cnt = nominal_counts_[static_cast<std::size_t>(c) * values_per_class_ +
                                           value_offset_[slot] + v];
        std::int64_t seen = observed_[static_cast<std::size_t>(c) * nominal_attr_count_ + slot];
        score[c] += std::log((static_cast<double>(cnt) + 1.0) /
                             (static_cast<double>(seen) + value_count_[slot]));
      }
    } else {
      double x = instance.values[a];
      for (int c = 0; c < k; ++c) {
        const GaussianStat& g =
            gauss_[static_cast<std::size_t>(c) * numeric_attr_count_ + numeric_slot_[a]];
        if (g.count == 0) continue;  // no evidence for this class yet
        double var = g.variance();
        if (var < kVarianceFloor) var = kVarianceFloor;
        double d = x - g.mean;
        score[c] += -0.5 * (std::log(2.0 * std::numbers::pi * var) + d * d / var);
      }
    }
  }
  double shift = score[0];
  for (int c = 1; c < k; ++c) {
    if (score[c] > shift) shift = score[c];
  }
  double sum = 0.0;
  for (int c = 0; c < k; ++c) {
    score[c] = std::exp(score[c] - shift);
    sum += score[c];
  }
  for (int c = 0; c < k; ++c) score[c] /= sum;
  return score;
}

int NaiveBayes::predict(const Instance& instance) const {
  return argmax_index(predict_proba(instance));
}

std::int64_t NaiveBayes::nominal_count(int cls, std::size_t attr, int value) const {
  int slot = nominal_slot_[attr];
  if (slot < 0) throw std::invalid_argument("attribute is not nominal");
  return nominal_counts_[static_cast<std::size_t>(cls) * values_per_class_ + value_offset_[slot] +
                         value];
}

std::int64_t NaiveBayes::observed_count(int cls, std::size_t attr) const {
  int slot = nominal_slot_[attr];
  if (slot < 0) throw std::invalid_argument("attribute is not nominal");
  return observed_[static_cast<std::size_t>(cls) * nominal_attr_count_ + slot];
}

const GaussianStat& NaiveBayes::gaussian(int cls, std::size_t attr) const {
  int slot = numeric_slot_[attr];
  if (slot < 0) throw std::invalid_argument("attribute is not numeric");
  return gauss_[static_cast<std::size_t>(cls) * numeric_attr_count_ + slot];
}

bool NaiveBayes::operator==(const NaiveBayes& other) const {
  // The dispatch tables are a pure function of the schema, so comparing the
  // schema contents covers them.
  return (schema_ == other.schema_ || *schema_ == *other.schema_) &&
         total_seen_ == other.total_seen_ && class_counts_ == other.class_counts_ &&
         nominal_counts_ == other.nominal_counts_ && observed_ == other.observed_ &&
         gauss_ == other.gauss_;
}

}  // namespace driftstream
