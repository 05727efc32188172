#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace graphpw {

/// Relative tolerance used by every inequality verification record.
inline constexpr double kSlackRelTol = 1e-9;

/// Tolerance for eigenvalue/interval boundary decisions, scaled by 1+|bound|.
inline constexpr double kBoundaryRelTol = 1e-10;

/// Largest vertex count accepted by the dense eigensolver unless overridden.
inline constexpr int kDefaultDenseLimit = 4096;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// An inequality `small <= big` passes when its slack is no worse than
/// -kSlackRelTol relative to the larger of 1 and `scale`.
inline bool slack_ok(double slack, double scale) {
  return slack >= -kSlackRelTol * std::max(1.0, scale);
}

inline bool is_infinite_p(double p) { return std::isinf(p) && p > 0; }

}  // namespace graphpw
