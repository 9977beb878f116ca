#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "driftstream/rng.hpp"

namespace driftstream {

/// Entropy of a distribution over K >= 2 classes, normalized by log K so the
/// result lands in [0, 1] (0 log 0 reads as 0). Throws std::invalid_argument
/// for negative mass, fewer than two entries, or a sum off 1 by more than
/// 1e-9.
double entropy_uncertainty(std::span<const double> p);

/// Moving labeling threshold shared by the variable-threshold strategies.
/// theta starts at 1 and stays positive under the multiplicative updates.
struct VarUncertaintyState {
  double theta = 1.0;
  double step = 0.01;

  bool operator==(const VarUncertaintyState&) const = default;
};

/// Core variable-threshold rule: request a label when `certainty` falls
/// below theta (scaled by `scale` for this decision only); then shrink theta
/// on a request and widen it otherwise.
bool threshold_decide(VarUncertaintyState& state, double certainty, double scale = 1.0);

/// Entropy-based variable-threshold decision: certainty is one minus the
/// normalized entropy of `p`.
bool var_uncertainty(VarUncertaintyState& state, std::span<const double> p);

/// Request a label with probability `budget`.
bool random_strategy(double budget, Rng& rng);

struct SplitState {
  double delta = 0.05;   // probability of taking the random branch
  double budget = 0.05;  // labeling probability inside the random branch
  VarUncertaintyState var;

  bool operator==(const SplitState&) const = default;
};

/// With probability delta defer to random_strategy, otherwise to
/// var_uncertainty. `random_branch` is invoked on entry to the random branch
/// before the draw; that branch is where callers may hook drift handling,
/// and by default nothing is hooked.
bool split_strategy(SplitState& state, std::span<const double> p, Rng& rng,
                    const std::function<void()>& random_branch = {});

enum class BaselineKind { FixedUncertainty, VarUncertainty, RandUncertainty, SelSampling };

struct BaselineParams {
  double fixed_threshold = 0.9;
  double step = 0.01;
  double sel_b = 1.0;

  bool operator==(const BaselineParams&) const = default;
};

/// One labeling decision for the reference strategies, all reading the
/// posterior of a single classifier:
///  - FixedUncertainty: label when the max posterior is below a fixed bar.
///  - VarUncertainty:   threshold_decide on the max posterior.
///  - RandUncertainty:  same, with theta scaled per decision by a positive
///                      truncated Normal(1, 1) draw.
///  - SelSampling:      label with probability b / (b + margin), margin being
///                      the gap between the two largest posteriors.
bool baseline_decide(BaselineKind kind, VarUncertaintyState& state,
                     std::span<const double> posteriors, const BaselineParams& params, Rng& rng);

/// Counts seen and labeled instances and enforces the hard budget cap:
/// grant only while labeled/seen stays below the budget, which keeps
/// labeled <= budget * seen + 1 at all times.
class BudgetLedger {
 public:
  explicit BudgetLedger(double budget);

  /// Call once per instance, before gate().
  void record_seen() { ++seen_; }

  /// True iff labeling was requested and the cap allows it; counts the label
  /// when granting.
  bool gate(bool want_label);

  std::uint64_t seen() const { return seen_; }
  std::uint64_t labeled() const { return labeled_; }
  double budget() const { return budget_; }
  double labeled_fraction() const {
    return seen_ ? static_cast<double>(labeled_) / static_cast<double>(seen_) : 0.0;
  }
  bool within_budget() const {
    return static_cast<double>(labeled_) <= budget_ * static_cast<double>(seen_) + 1.0;
  }

 private:
  double budget_;
  std::uint64_t seen_ = 0;
  std::uint64_t labeled_ = 0;
};

}  // namespace driftstream
