#pragma once

#include <cstdint>

#include "driftstream/instance.hpp"
#include "driftstream/stream.hpp"

namespace driftstream {

/// Hands out true labels on demand and counts every query. The oracle never
/// lies: the revealed label is always the instance's ground truth.
class LabelOracle {
 public:
  explicit LabelOracle(const InstanceSource* source = nullptr) : source_(source) {}

  int reveal(const Instance& instance) {
    ++query_count_;
    return instance.true_class;
  }

  std::uint64_t query_count() const { return query_count_; }
  const InstanceSource* source() const { return source_; }

 private:
  const InstanceSource* source_;
  std::uint64_t query_count_ = 0;
};

}  // namespace driftstream
