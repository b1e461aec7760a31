#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "banach2d/ext_real.hpp"

namespace banach2d {

/// Below this magnitude the mean parameter is treated as exactly zero
/// (geometric mean); the power formula degenerates to 0/0 there.
inline constexpr double kGeometricMeanThreshold = 1e-12;

/**
 * Power mean of two nonnegative reals,
 *
 *   M_t(a, b) = ((a^t + b^t) / 2)^(1/t),   t != 0,
 *
 * with M_0 = sqrt(ab), M_{-inf} = min and M_{+inf} = max.
 *
 * The larger argument is factored out for t > 0 and the smaller one for
 * t < 0, so the remaining power q^t always lies in [0, 1] and neither
 * overflows nor needs clamping. The outer power is taken through
 * log1p/expm1 to stay accurate as t approaches 0.
 *
 * For t <= 0 a zero argument gives 0 (the analytic limit).
 */
inline double generalized_mean(const ExtReal& t, double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("generalized_mean: arguments must be finite and nonnegative");
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (t.is_neg_inf()) return lo;
  if (t.is_pos_inf()) return hi;

  const double p = t.value();
  if (hi == 0.0) return 0.0;
  if (std::abs(p) < kGeometricMeanThreshold) return std::sqrt(lo) * std::sqrt(hi);
  if (p < 0.0 && lo == 0.0) return 0.0;
  if (lo == hi) return hi;
  if (p == 1.0) return 0.5 * lo + 0.5 * hi;
  if (p == 2.0) return std::hypot(lo, hi) * std::numbers::sqrt2 * 0.5;

  // base^p * q^p with q^p in [0, 1].
  const double base = p > 0.0 ? hi : lo;
  const double q = p > 0.0 ? lo / hi : hi / lo;
  // hi / lo can overflow when the arguments are far apart; fall back to a log difference.
  const double log_q = std::isfinite(q) ? std::log(q) : std::log(hi) - std::log(lo);  // -inf when q == 0
  const double shifted = std::expm1(p * log_q);  // q^p - 1 in [-1, 0]
  return base * std::exp(std::log1p(0.5 * shifted) / p);
}

}  // namespace banach2d
