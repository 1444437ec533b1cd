#pragma once

#include <vector>

namespace iftem {

/// M-ary equidistant PAM alphabet, zero mean and unit average symbol
/// energy. Levels are (2m - 1 - M) * d for m = 1..M with
/// d = sqrt(3 / (M^2 - 1)), stored in increasing order.
struct PamConstellation {
  int m = 0;                   // cardinality
  std::vector<double> levels;  // strictly increasing, equidistant

  double min_level() const { return levels.front(); }
  double max_level() const { return levels.back(); }
  /// Distance between adjacent levels (2d).
  double spacing() const { return levels[1] - levels[0]; }
};

/// Builds the unit-energy alphabet. Throws std::invalid_argument for m < 2.
PamConstellation make_constellation(int m);

}  // namespace iftem
