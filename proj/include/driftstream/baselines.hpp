#pragma once

#include <cstdint>
#include <memory>

#include "driftstream/active.hpp"
#include "driftstream/naive_bayes.hpp"
#include "driftstream/policy.hpp"
#include "driftstream/rng.hpp"
#include "driftstream/schema.hpp"

namespace driftstream {

/// Reference active learners: one incremental Naive Bayes (no ensemble, no
/// drift detector) whose posterior feeds a single uncertainty rule —
/// fixed-threshold, variable-threshold, randomized variable-threshold, or
/// selective sampling — hard-gated by the budget ledger.
class UncertaintyBaseline : public ActivePolicy {
 public:
  UncertaintyBaseline(std::shared_ptr<const Schema> schema, BaselineKind kind, double budget,
                      BaselineParams params, std::uint64_t seed);

  StepResult step(const Instance& instance, LabelOracle& oracle) override;
  const BudgetLedger& ledger() const override { return ledger_; }

  const NaiveBayes& model() const { return model_; }
  BaselineKind kind() const { return kind_; }
  const VarUncertaintyState& threshold() const { return var_; }

 private:
  NaiveBayes model_;
  BaselineKind kind_;
  BaselineParams params_;
  VarUncertaintyState var_;
  BudgetLedger ledger_;
  Rng rng_;
};

}  // namespace driftstream
