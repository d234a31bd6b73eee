#pragma once

#include <cmath>

namespace fuchsia {

/// Comparison tolerance used for classification ties, geometry comparisons
/// and orbit deduplication. Defaults to 1e-9; the environment variable
/// FUCHSIA_TOLERANCE overrides it (read once at first use).
double comparison_tolerance();

/// Determinant-normalization tolerance. Fixed; not overridable.
inline constexpr double kDeterminantTolerance = 1e-12;

/// Slack allowed when testing half-circle tangency.
inline constexpr double kTangencyTolerance = 1e-12;

inline bool approx(double actual, double expected, double tolerance) {
  return std::abs(actual - expected) <= tolerance;
}

inline bool approx(double actual, double expected) {
  return approx(actual, expected, comparison_tolerance());
}

/// det == 1 up to kDeterminantTolerance, relative to the magnitude of the
/// products entering the determinant (an absolute check is below double
/// resolution once entries reach ~1e8).
inline bool det_is_one(double a, double b, double c, double d) {
  const double scale = std::abs(a * d) + std::abs(b * c);
  return std::abs(a * d - b * c - 1.0) <=
         kDeterminantTolerance * (scale > 1.0 ? scale : 1.0);
}

}  // namespace fuchsia
