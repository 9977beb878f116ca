#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "driftstream/instance.hpp"
#include "driftstream/schema.hpp"

namespace driftstream {

/// Pull-based, single-pass instance stream.
class InstanceSource {
 public:
  virtual ~InstanceSource() = default;
  virtual const Schema& schema() const = 0;
  /// Next instance in order, or nullopt once the stream is exhausted.
  virtual std::optional<Instance> next() = 0;
};

/// In-memory source, mostly for fixtures and small files.
class VectorSource : public InstanceSource {
 public:
  VectorSource(std::shared_ptr<const Schema> schema, std::vector<Instance> rows)
      : schema_(std::move(schema)), rows_(std::move(rows)) {}

  const Schema& schema() const override { return *schema_; }

  std::optional<Instance> next() override {
    if (pos_ >= rows_.size()) return std::nullopt;
    return rows_[pos_++];
  }

 private:
  std::shared_ptr<const Schema> schema_;
  std::vector<Instance> rows_;
  std::size_t pos_ = 0;
};

}  // namespace driftstream
