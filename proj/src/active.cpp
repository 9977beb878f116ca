#include "driftstream/active.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace driftstream {

double entropy_uncertainty(std::span<const double> p) {
  if (p.size() < 2) throw std::invalid_argument("need a distribution over at least two classes");
  double sum = 0.0;
  double h = 0.0;
  for (double x : p) {
    if (x < 0.0) throw std::invalid_argument("negative probability");
    sum += x;
    if (x > 0.0) h -= x * std::log(x);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("distribution does not sum to 1");
  double em = h / std::log(static_cast<double>(p.size()));
  return std::clamp(em, 0.0, 1.0);
}

bool threshold_decide(VarUncertaintyState& state, double certainty, double scale) {
  if (certainty < state.theta * scale) {
    state.theta *= 1.0 - state.step;
    return true;
  }
  state.theta *= 1.0 + state.step;
  return false;
}

bool var_uncertainty(VarUncertaintyState& state, std::span<const double> p) {
  return threshold_decide(state, 1.0 - entropy_uncertainty(p));
}

bool random_strategy(double budget, Rng& rng) {
  if (budget >= 1.0) return true;
  return rng.uniform() < budget;
}

bool split_strategy(SplitState& state, std::span<const double> p, Rng& rng,
                    const std::function<void()>& random_branch) {
  if (rng.uniform() < state.delta) {
    if (random_branch) random_branch();
    return random_strategy(state.budget, rng);
  }
  return var_uncertainty(state.var, p);
}

bool baseline_decide(BaselineKind kind, VarUncertaintyState& state,
                     std::span<const double> posteriors, const BaselineParams& params, Rng& rng) {
  if (posteriors.size() < 2) throw std::invalid_argument("need at least two classes");
  double top = 0.0;
  double second = 0.0;
  for (double x : posteriors) {
    if (x > top) {
      second = top;
      top = x;
    } else if (x > second) {
      second = x;
    }
  }
  switch (kind) {
    case BaselineKind::FixedUncertainty:
      return top < params.fixed_threshold;
    case BaselineKind::VarUncertainty:
      return threshold_decide(state, top);
    case BaselineKind::RandUncertainty: {
      double eta;
      do {
        eta = 1.0 + rng.gaussian();
      } while (eta <= 0.0);
      return threshold_decide(state, top, eta);
    }
    case BaselineKind::SelSampling: {
      double margin = top - second;
      return rng.uniform() < params.sel_b / (params.sel_b + margin);
    }
  }
  throw std::invalid_argument("unknown baseline kind");
}

BudgetLedger::BudgetLedger(double budget) : budget_(budget) {
  if (budget < 0.0 || budget > 1.0) throw std::invalid_argument("budget must be in [0, 1]");
}

bool BudgetLedger::gate(bool want_label) {
  if (!want_label) return false;
  if (static_cast<double>(labeled_) < budget_ * static_cast<double>(seen_)) {
    ++labeled_;
    return true;
  }
  return false;
}

}  // namespace driftstream
