#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "driftstream/rng.hpp"
#include "driftstream/stream.hpp"

namespace driftstream {

enum class Family { Sea, Stagger, Led, Agrawal, Hyperplane };

std::string_view family_name(Family family);
Family parse_family(std::string_view name);  // throws std::invalid_argument

/// Shared, immutable schema of a family.
std::shared_ptr<const Schema> family_schema(Family family);

/// Number of concepts the drift scenarios cycle through. Led and Hyperplane
/// accept any non-negative concept id beyond that.
int family_concept_count(Family family);

bool valid_concept(Family family, int concept_id);

/// Draw one labeled instance of the given concept. Throws
/// std::invalid_argument for an invalid concept id.
Instance generate(Family family, int concept_id, Rng& rng);

// Labeling rules, exposed so they can be checked directly.
extern const std::array<double, 4> kSeaThresholds;
int sea_class(double f1, double f2, double threshold);
int stagger_class(int concept_id, int size, int color, int shape);
/// Lit segments (a..g) of a decimal digit on a seven-segment display.
const std::array<int, 7>& led_segments(int digit);
/// Attribute positions carrying the segments under a given concept.
std::array<int, 7> led_relevant_positions(int concept_id);
int agrawal_class(int function, double salary, int age, int elevel);
std::array<double, 10> hyperplane_weights(int concept_id);
int hyperplane_class(std::span<const double> weights, std::span<const double> x);

struct DriftSpec {
  std::vector<std::uint64_t> change_points;  // strictly increasing positions
  std::uint64_t transition_width = 0;        // 0 = abrupt switches
  std::vector<int> concept_sequence;         // size = change_points.size() + 1
};

struct NoiseSpec {
  enum class Mode { ClassFlip, AttributeFlip };
  double rate = 0.0;
  Mode mode = Mode::ClassFlip;
};

/// Probability that position t already draws from the concept entering at
/// `change_point`: a sigmoid of slope 4/width centered on the change point,
/// degenerating to a step when width is 0.
double incoming_probability(std::uint64_t t, std::uint64_t change_point, std::uint64_t width);

/// Bounded stream over one concept family with scheduled concept changes.
/// Inside a transition window (4 widths either side of a change point) each
/// instance picks between the outgoing and incoming concept by a Bernoulli
/// draw of the sigmoid probability; outside all windows the stream is drawn
/// purely from the active concept.
class DriftStream : public InstanceSource {
 public:
  DriftStream(Family family, DriftSpec spec, std::uint64_t length, std::uint64_t seed);

  const Schema& schema() const override { return *schema_; }
  std::optional<Instance> next() override;

  /// Concept supplying position t; consumes randomness only inside a
  /// transition window.
  int concept_at(std::uint64_t t, Rng& rng) const;

  std::uint64_t length() const { return length_; }

 private:
  Family family_;
  DriftSpec spec_;
  std::uint64_t length_;
  std::uint64_t pos_ = 0;
  Rng rng_;
  std::shared_ptr<const Schema> schema_;
};

/// Label or attribute corruption applied to one instance:
///  - ClassFlip: with probability `rate` replace the class by a uniformly
///    random different one.
///  - AttributeFlip: flip every two-valued nominal attribute independently
///    with probability `rate`.
Instance inject_noise(Instance instance, const NoiseSpec& spec, const Schema& schema, Rng& rng);

class NoisyStream : public InstanceSource {
 public:
  NoisyStream(std::unique_ptr<InstanceSource> inner, NoiseSpec spec, std::uint64_t seed)
      : inner_(std::move(inner)), spec_(spec), rng_(seed) {}

  const Schema& schema() const override { return inner_->schema(); }

  std::optional<Instance> next() override {
    auto item = inner_->next();
    if (!item) return std::nullopt;
    return inject_noise(std::move(*item), spec_, inner_->schema(), rng_);
  }

 private:
  std::unique_ptr<InstanceSource> inner_;
  NoiseSpec spec_;
  Rng rng_;
};

}  // namespace driftstream
