#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "driftstream/active.hpp"
#include "driftstream/hddm.hpp"
#include "driftstream/instance.hpp"
#include "driftstream/naive_bayes.hpp"
#include "driftstream/oracle.hpp"
#include "driftstream/policy.hpp"
#include "driftstream/rng.hpp"
#include "driftstream/schema.hpp"

namespace driftstream {

struct EnsembleConfig {
  int n_learners = 10;
  double alpha_warning = 0.005;
  double alpha_drift = 0.001;
  std::uint64_t seed = 1;
  /// Run the per-instance base-slot loop across threads. Slots only touch
  /// their own state, so the result is bit-identical to the serial loop.
  bool parallel_slots = false;

  bool operator==(const EnsembleConfig&) const = default;
};

/// The base-learner predictions for one instance plus its label, if known.
/// This is what the meta-learner consumes as a plain nominal instance.
struct MetaInstance {
  std::vector<int> predictions;
  std::optional<int> label;

  bool operator==(const MetaInstance&) const = default;
};

/// Fraction of base learners voting for each class.
std::vector<double> vote_proportions(const MetaInstance& meta, int class_count);

/// One base learner with its drift detector, the background model grown
/// during a Warning, and the slot's private random stream driving its
/// Poisson(1) online-bagging weights.
struct BaseSlot {
  NaiveBayes learner;
  HddmDetector detector;
  std::optional<NaiveBayes> background;
  Rng rng;
  std::uint64_t drift_count = 0;

  bool operator==(const BaseSlot&) const = default;
};

/// Stacking ensemble of incremental Naive Bayes learners. Every labeled
/// instance runs test-then-train on each slot: the slot's prediction error
/// feeds its detector, a Warning starts a background learner, a Drift swaps
/// it in (or a fresh model) with the detector reset, and the (possibly new)
/// learner then trains with a Poisson(1) bagging weight from the slot's own
/// random stream. The meta-learner — another Naive Bayes over the slots'
/// predictions — carries its own detector and resets on its Drift.
///
/// Slot diversity comes from the independent bagging streams and from
/// drift-staggered resets; all slots see the same labeled instances.
class Ensemble {
 public:
  explicit Ensemble(std::shared_ptr<const Schema> schema, EnsembleConfig config = {});

  const Schema& schema() const { return *schema_; }
  const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
  const Schema& meta_schema() const { return *meta_schema_; }
  const EnsembleConfig& config() const { return config_; }
  int n_learners() const { return static_cast<int>(slots_.size()); }

  /// Per-slot predictions on the instance as it stands now (before any
  /// training on it), with the instance's visible label carried along.
  MetaInstance build_meta_instance(const Instance& instance) const;

  /// Meta-learner posterior over classes for a prepared meta-instance and
  /// its argmax. An untrained meta-learner falls back to the argmax of the
  /// slots' vote proportions (the posterior stays the meta-learner's, i.e.
  /// uniform).
  std::pair<int, std::vector<double>> predict_from_meta(const MetaInstance& meta) const;

  /// build_meta_instance + predict_from_meta. Read-only.
  std::pair<int, std::vector<double>> predict(const Instance& instance) const;

  /// Full test-then-train pass for one labeled instance (visible_class must
  /// be set); builds the meta-instance from pre-training predictions.
  void train_on_labeled(const Instance& instance);

  /// Same, with the meta-instance already built at prediction time.
  void train_with_meta(const Instance& instance, const MetaInstance& meta);

  const BaseSlot& slot(int i) const { return slots_[static_cast<std::size_t>(i)]; }
  const NaiveBayes& meta_learner() const { return meta_; }
  const HddmDetector& meta_detector() const { return meta_detector_; }
  std::uint64_t base_drift_count() const;
  std::uint64_t meta_drift_count() const { return meta_drifts_; }
  std::uint64_t trained_count() const { return trained_; }

  /// Same configuration, schema contents, and learned state; the schemas
  /// need not be the same objects.
  bool operator==(const Ensemble& other) const;

 private:
  void slot_step(BaseSlot& slot, const Instance& instance, int label);

  std::shared_ptr<const Schema> schema_;
  std::shared_ptr<const Schema> meta_schema_;
  EnsembleConfig config_;
  std::vector<BaseSlot> slots_;
  NaiveBayes meta_;
  HddmDetector meta_detector_;
  std::uint64_t meta_drifts_ = 0;
  std::uint64_t trained_ = 0;
};

/// Active-learning policy around the ensemble: predict, then let the split
/// strategy (random branch vs. variable threshold, applied to the vote
/// proportions) ask for the label, hard-gated by the budget ledger. Only
/// bought labels ever mutate the ensemble.
class FaseAl : public ActivePolicy {
 public:
  FaseAl(std::shared_ptr<const Schema> schema, EnsembleConfig config, SplitState split,
         std::uint64_t strategy_seed);

  StepResult step(const Instance& instance, LabelOracle& oracle) override;
  const BudgetLedger& ledger() const override { return ledger_; }

  const Ensemble& ensemble() const { return ensemble_; }
  const SplitState& split() const { return split_; }

  /// Called on entry to the strategy's random branch. Inert by default.
  void set_drift_hook(std::function<void()> hook) { drift_hook_ = std::move(hook); }

 private:
  Ensemble ensemble_;
  SplitState split_;
  BudgetLedger ledger_;
  Rng strategy_rng_;
  std::function<void()> drift_hook_;
};

/// Fully supervised variant: every instance is labeled and trained on.
class FaseSupervised : public ActivePolicy {
 public:
  FaseSupervised(std::shared_ptr<const Schema> schema, EnsembleConfig config);

  StepResult step(const Instance& instance, LabelOracle& oracle) override;
  const BudgetLedger& ledger() const override { return ledger_; }

  const Ensemble& ensemble() const { return ensemble_; }

 private:
  Ensemble ensemble_;
  BudgetLedger ledger_;
};

}  // namespace driftstream
