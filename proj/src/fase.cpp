#include "driftstream/fase.hpp"

#include <stdexcept>
#include <string>

namespace driftstream {

namespace {

// Per-slot seed streams hang off the ensemble seed at distinct tags; tag 0
// is reserved so re-tagging the ensemble itself stays collision-free.
constexpr std::uint64_t kSlotTagBase = 100;

std::shared_ptr<const Schema> make_meta_schema(const Schema& base, int n_learners) {
  auto meta = std::make_shared<Schema>();
  meta->attributes.reserve(static_cast<std::size_t>(n_learners));
  for (int i = 0; i < n_learners; ++i) {
    meta->attributes.push_back({"vote_" + std::to_string(i + 1), base.class_values});
  }
  meta->class_values = base.class_values;
  meta->class_name = base.class_name;
  return meta;
}

Instance to_meta_nominal(const MetaInstance& meta) {
  Instance out;
  out.values.reserve(meta.predictions.size());
  for (int p : meta.predictions) out.values.push_back(static_cast<double>(p));
  out.true_class = meta.label.value_or(-1);
  out.visible_class = meta.label;
  return out;
}

int require_label(const Instance& instance) {
  if (!instance.visible_class) {
    throw std::invalid_argument("training requires a labeled instance");
  }
  return *instance.visible_class;
}

}  // namespace

std::vector<double> vote_proportions(const MetaInstance& meta, int class_count) {
  if (class_count < 2) throw std::invalid_argument("need at least two classes");
  std::vector<double> votes(static_cast<std::size_t>(class_count), 0.0);
  for (int p : meta.predictions) {
    if (p < 0 || p >= class_count) throw std::invalid_argument("vote outside the class range");
    votes[static_cast<std::size_t>(p)] += 1.0;
  }
  const double n = static_cast<double>(meta.predictions.size());
  for (double& v : votes) v /= n;
  return votes;
}

Ensemble::Ensemble(std::shared_ptr<const Schema> schema, EnsembleConfig config)
    : schema_(std::move(schema)),
      meta_schema_(make_meta_schema(*schema_, config.n_learners)),
      config_(config),
      meta_(meta_schema_),
      meta_detector_(config.alpha_warning, config.alpha_drift) {
  if (config.n_learners < 1) throw std::invalid_argument("n_learners must be at least 1");
  slots_.reserve(static_cast<std::size_t>(config.n_learners));
  for (int i = 0; i < config.n_learners; ++i) {
    slots_.push_back(BaseSlot{
        NaiveBayes(schema_),
        HddmDetector(config.alpha_warning, config.alpha_drift),
        std::nullopt,
        Rng(substream(config.seed, kSlotTagBase + static_cast<std::uint64_t>(i))),
        0,
    });
  }
}

MetaInstance Ensemble::build_meta_instance(const Instance& instance) const {
  MetaInstance meta;
  meta.predictions.resize(slots_.size());
  const int n = static_cast<int>(slots_.size());
#ifdef _OPENMP
  if (config_.parallel_slots) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      meta.predictions[static_cast<std::size_t>(i)] =
          slots_[static_cast<std::size_t>(i)].learner.predict(instance);
    }
  } else
#endif
  {
    for (int i = 0; i < n; ++i) {
      meta.predictions[static_cast<std::size_t>(i)] =
          slots_[static_cast<std::size_t>(i)].learner.predict(instance);
    }
  }
  meta.label = instance.visible_class;
  return meta;
}

std::pair<int, std::vector<double>> Ensemble::predict_from_meta(const MetaInstance& meta) const {
  std::vector<double> posterior = meta_.predict_proba(to_meta_nominal(meta));
  int predicted;
  if (meta_.total_seen() == 0) {
    auto votes = vote_proportions(meta, schema_->class_count());
    predicted = argmax_index(votes);
  } else {
    predicted = argmax_index(posterior);
  }
  return {predicted, std::move(posterior)};
}

std::pair<int, std::vector<double>> Ensemble::predict(const Instance& instance) const {
  return predict_from_meta(build_meta_instance(instance));
}

void Ensemble::slot_step(BaseSlot& slot, const Instance& instance, int label) {
  // Test: this slot's own error drives its detector.
  const int predicted = slot.learner.predict(instance);
  const DriftStatus status = slot.detector.update(predicted == label ? 0 : 1);

  if (status == DriftStatus::Drift) {
    // The detector reset itself; the model restarts from the background
    // learner when a Warning saw one grow, from scratch otherwise.
    if (slot.background) {
      slot.learner = std::move(*slot.background);
      slot.background.reset();
    } else {
      slot.learner = NaiveBayes(schema_);
    }
    ++slot.drift_count;
  } else if (status == DriftStatus::Warning) {
    if (!slot.background) slot.background.emplace(schema_);
  } else if (slot.background) {
    // Warning cleared without a drift: the suspicion was noise.
    slot.background.reset();
  }

  // Train with this slot's bagging weight; the background model shadows the
  // live one on the same resample.
  const int weight = slot.rng.poisson1();
  for (int w = 0; w < weight; ++w) {
    slot.learner.learn(instance, label);
    if (slot.background) slot.background->learn(instance, label);
  }
}

void Ensemble::train_on_labeled(const Instance& instance) {
  train_with_meta(instance, build_meta_instance(instance));
}

void Ensemble::train_with_meta(const Instance& instance, const MetaInstance& meta) {
  const int label = require_label(instance);
  const int n = static_cast<int>(slots_.size());
#ifdef _OPENMP
  if (config_.parallel_slots) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) slot_step(slots_[static_cast<std::size_t>(i)], instance, label);
  } else
#endif
  {
    for (int i = 0; i < n; ++i) slot_step(slots_[static_cast<std::size_t>(i)], instance, label);
  }

  // Meta level, after every slot settled: test against the pre-training
  // votes, then learn them.
  Instance meta_nominal = to_meta_nominal(meta);
  meta_nominal.visible_class = label;
  meta_nominal.true_class = label;
  const int meta_predicted = meta_.predict(meta_nominal);
  if (meta_detector_.update(meta_predicted == label ? 0 : 1) == DriftStatus::Drift) {
    meta_ = NaiveBayes(meta_schema_);
    ++meta_drifts_;
  }
  meta_.learn(meta_nominal, label);
  ++trained_;
}

std::uint64_t Ensemble::base_drift_count() const {
  std::uint64_t total = 0;
  for (const auto& slot : slots_) total += slot.drift_count;
  return total;
}

bool Ensemble::operator==(const Ensemble& other) const {
  // The meta schema is derived from the base schema and n_learners, so the
  // base schema contents plus the config cover it.
  return config_ == other.config_ && (schema_ == other.schema_ || *schema_ == *other.schema_) &&
         slots_ == other.slots_ && meta_ == other.meta_ &&
         meta_detector_ == other.meta_detector_ && meta_drifts_ == other.meta_drifts_ &&
         trained_ == other.trained_;
}

FaseAl::FaseAl(std::shared_ptr<const Schema> schema, EnsembleConfig config, SplitState split,
               std::uint64_t strategy_seed)
    : ensemble_(std::move(schema), config),
      split_(split),
      ledger_(split.budget),
      strategy_rng_(strategy_seed) {}

StepResult FaseAl::step(const Instance& instance, LabelOracle& oracle) {
  MetaInstance meta = ensemble_.build_meta_instance(instance);
  auto [predicted, posterior] = ensemble_.predict_from_meta(meta);
  (void)posterior;  // the strategy reads the vote proportions, not the meta posterior

  ledger_.record_seen();
  auto votes = vote_proportions(meta, ensemble_.schema().class_count());
  const bool want = split_strategy(split_, votes, strategy_rng_, drift_hook_);
  const bool labeled = ledger_.gate(want);
  if (labeled) {
    const int label = oracle.reveal(instance);
    Instance bought = instance;
    bought.visible_class = label;
    bought.true_class = label;
    meta.label = label;
    ensemble_.train_with_meta(bought, meta);
  }
  return {predicted, labeled};
}

FaseSupervised::FaseSupervised(std::shared_ptr<const Schema> schema, EnsembleConfig config)
    : ensemble_(std::move(schema), config), ledger_(1.0) {}

StepResult FaseSupervised::step(const Instance& instance, LabelOracle& oracle) {
  MetaInstance meta = ensemble_.build_meta_instance(instance);
  auto [predicted, posterior] = ensemble_.predict_from_meta(meta);
  (void)posterior;

  ledger_.record_seen();
  const bool labeled = ledger_.gate(true);
  const int label = oracle.reveal(instance);
  Instance bought = instance;
  bought.visible_class = label;
  bought.true_class = label;
  meta.label = label;
  ensemble_.train_with_meta(bought, meta);
  return {predicted, labeled};
}

}  // namespace driftstream
