#include "driftstream/baselines.hpp"

#include <utility>

namespace driftstream {

UncertaintyBaseline::UncertaintyBaseline(std::shared_ptr<const Schema> schema, BaselineKind kind,
                                         double budget, BaselineParams params, std::uint64_t seed)
    : model_(std::move(schema)),
      kind_(kind),
      params_(params),
      var_{1.0, params.step},
      ledger_(budget),
      rng_(seed) {}

StepResult UncertaintyBaseline::step(const Instance& instance, LabelOracle& oracle) {
  auto posterior = model_.predict_proba(instance);
  const int predicted = argmax_index(posterior);

  ledger_.record_seen();
  const bool want = baseline_decide(kind_, var_, posterior, params_, rng_);
  const bool labeled = ledger_.gate(want);
  if (labeled) {
    const int label = oracle.reveal(instance);
    model_.learn(instance, label);
  }
  return {predicted, labeled};
}

}  // namespace driftstream
