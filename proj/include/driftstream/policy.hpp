#pragma once

#include "driftstream/active.hpp"
#include "driftstream/instance.hpp"
#include "driftstream/oracle.hpp"

namespace driftstream {

struct StepResult {
  int predicted = 0;
  bool labeled = false;
};

/// Test-then-train under a labeling budget. step() first predicts on the
/// instance as if unlabeled, then decides whether to buy its label from the
/// oracle, and trains only when it did. Implementations read ground truth
/// exclusively through the oracle.
class ActivePolicy {
 public:
  virtual ~ActivePolicy() = default;

  virtual StepResult step(const Instance& instance, LabelOracle& oracle) = 0;

  /// Budget accounting across all steps so far.
  virtual const BudgetLedger& ledger() const = 0;
};

}  // namespace driftstream
