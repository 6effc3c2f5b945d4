#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace lightspan {

// Distance comparisons throughout the library use a 1e-9 relative tolerance.
inline constexpr double kRelTol = 1e-9;

inline double comparison_tol(double a, double b) {
  return kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool approx_eq(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= comparison_tol(a, b);
}

inline bool approx_leq(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a <= b;
  return a <= b + comparison_tol(a, b);
}

inline bool approx_geq(double a, double b) { return approx_leq(b, a); }

/// a > b beyond tolerance.
inline bool definitely_gt(double a, double b) { return !approx_leq(a, b); }

/// Smallest integer >= x, robust to one-ulp noise (e.g. 0.1 * 30 in doubles).
inline std::int64_t ceil_tolerant(double x) {
  return static_cast<std::int64_t>(
      std::ceil(x - kRelTol * std::max(1.0, std::abs(x))));
}

/// Largest integer <= x with the same guard.
inline std::int64_t floor_tolerant(double x) {
  return static_cast<std::int64_t>(
      std::floor(x + kRelTol * std::max(1.0, std::abs(x))));
}

/// Points a ball must contain to hold an eps fraction of n: ceil(eps*n),
/// never below 1.
inline std::int64_t ceil_count(double eps, std::int64_t n) {
  return std::max<std::int64_t>(1, ceil_tolerant(eps * static_cast<double>(n)));
}

}  // namespace lightspan
