#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace driftstream {

/// One example of a stream. Nominal attributes store their value index as a
/// double; a missing cell is NaN. `true_class` is the ground truth (always
/// known to the generator / file), `visible_class` is only set once a label
/// has been revealed, and when set it always equals `true_class`.
struct Instance {
  std::vector<double> values;
  int true_class = -1;
  std::optional<int> visible_class;

  static double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }

  bool is_missing(std::size_t i) const { return std::isnan(values[i]); }
  int nominal(std::size_t i) const { return static_cast<int>(values[i]); }
};

}  // namespace driftstream
