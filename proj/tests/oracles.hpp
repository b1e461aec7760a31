#pragma once

// Reference implementations that share no code with the library: their own
// norm formulas, naive long-double means, brute-force searches and closed
// forms. Tests compare library output against these.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using P = std::array<double, 2>;
using Norm = std::function<double(double, double)>;

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

/// Gauge of a centrally symmetric polygon given by its vertices in angular
/// order: intersect the ray through (x, y) with every edge.
inline double polygon_gauge(const std::vector<P>& verts, double x, double y) {
  if (x == 0.0 && y == 0.0) return 0.0;
  long double best = 0.0L;
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P a = verts[i];
    const P b = verts[(i + 1) % n];
    // Solve s * (x, y) = a + u (b - a) for s > 0, u in [0, 1]; gauge = 1 / s.
    const long double ex = b[0] - a[0];
    const long double ey = b[1] - a[1];
    const long double det = static_cast<long double>(x) * -ey - static_cast<long double>(y) * -ex;
    if (det == 0.0L) continue;
    const long double s = (a[0] * -ey - a[1] * -ex) / det;
    const long double u = (static_cast<long double>(x) * a[1] - static_cast<long double>(y) * a[0]) / det;
    if (s > 0.0L && u >= -1e-15L && u <= 1.0L + 1e-15L) best = std::max(best, 1.0L / s);
  }
  return static_cast<double>(best);
}

inline std::vector<P> hexagon_vertices() {
  std::vector<P> v;
  for (int k = 0; k < 6; ++k) {
    const long double a = kPi * k / 3.0L;
    v.push_back({static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))});
  }
  return v;
}

inline double hexagon(double x, double y) {
  static const auto verts = hexagon_vertices();
  return polygon_gauge(verts, x, y);
}

inline double l1(double x, double y) { return std::abs(x) + std::abs(y); }
inline double l2(double x, double y) { return std::sqrt(static_cast<double>(static_cast<long double>(x) * x + static_cast<long double>(y) * y)); }
inline double linf(double x, double y) { return std::max(std::abs(x), std::abs(y)); }
inline double lp(double p, double x, double y) {
  return static_cast<double>(std::pow(std::pow(std::abs(static_cast<long double>(x)), p) + std::pow(std::abs(static_cast<long double>(y)), p), 1.0L / p));
}

inline double l1_linf_hybrid(double x, double y) { return x * y >= 0 ? linf(x, y) : l1(x, y); }
inline double day_james(double x, double y) { return x * y >= 0 ? l2(x, y) : l1(x, y); }

/// Naive power mean in long double.
inline double power_mean(long double t, long double a, long double b) {
  if (std::isinf(t)) return static_cast<double>(t < 0 ? std::min(a, b) : std::max(a, b));
  if (t == 0.0L) return static_cast<double>(std::sqrt(a * b));
  if (t < 0 && (a == 0 || b == 0)) return 0.0;
  return static_cast<double>(std::pow((std::pow(a, t) + std::pow(b, t)) / 2.0L, 1.0L / t));
}

/// Unit vector of `norm` at angle theta.
inline P unit(const Norm& norm, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double r = norm(c, s);
  return {c / r, s / r};
}

inline std::vector<P> sphere(const Norm& norm, int n) {
  std::vector<P> pts;
  for (int k = 0; k < n; ++k) pts.push_back(unit(norm, 2.0 * static_cast<double>(kPi) * k / n));
  return pts;
}

/// sup of f over an n x n angle grid of unit-vector pairs.
inline double brute_sup(const Norm& norm, int n, const std::function<double(P, P)>& f) {
  const auto pts = sphere(norm, n);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& u : pts)
    for (const auto& v : pts) best = std::max(best, f(u, v));
  return best;
}

inline double brute_skew(const Norm& norm, int n, long double t, double tau) {
  return brute_sup(norm, n, [&](P x, P y) {
    return power_mean(t, norm(x[0] + tau * y[0], x[1] + tau * y[1]), norm(tau * x[0] - y[0], tau * x[1] - y[1]));
  });
}

/// Max over all ordered vertex pairs (the exact value for t >= 1 on polygons).
inline double vertex_skew(const Norm& norm, const std::vector<P>& verts, long double t, double tau) {
  double best = 0.0;
  for (const auto& x : verts)
    for (const auto& y : verts)
      best = std::max(best, power_mean(t, norm(x[0] + tau * y[0], x[1] + tau * y[1]),
                                       norm(tau * x[0] - y[0], tau * x[1] - y[1])));
  return best;
}

/// Brute-force delta(eps): for each x on an n-grid, every y on a fine grid.
inline double brute_delta(const Norm& norm, int n, double eps) {
  const auto pts = sphere(norm, n);
  double best = 1.0;
  for (const auto& x : pts)
    for (const auto& y : pts)
      if (norm(x[0] - y[0], x[1] - y[1]) >= eps) best = std::min(best, 1.0 - norm(x[0] + y[0], x[1] + y[1]) / 2.0);
  return best;
}

// ---- closed forms

/// Skew constant of the regular hexagon and of the l1/linf hybrid for t >= 1.
inline double piecewise_skew(double t, double tau) {
  const long double second = tau >= 1.0 ? std::pow(static_cast<long double>(tau), t) : 1.0L;
  return static_cast<double>(std::pow((std::pow(1.0L + tau, t) + second) / 2.0L, 1.0L / t));
}

inline double euclid_delta(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }

/// The unsimplified bound, in long double.
inline double thm33_raw(long double j) {
  const long double s = (j - 1) * (j - 1);
  const long double a = std::sqrt((2 * j - j * j) * (2 * j - j * j) + 4 * s);
  const long double d = (j * j - 2 * j + a);
  return static_cast<double>(s + 4 * s * a / (d * d + 4 * s));
}

// ---- generators

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  /// Mean parameter: mostly finite, with infinities, zero and near-zero mixed in.
  double mean_parameter() {
    switch (integer(0, 9)) {
      case 0: return -std::numeric_limits<double>::infinity();
      case 1: return std::numeric_limits<double>::infinity();
      case 2: return 0.0;
      case 3: return uniform(-1e-10, 1e-10);
      case 4: return static_cast<double>(integer(-4, 4));
      default: return uniform(-60.0, 60.0);
    }
  }
  /// Nonnegative argument, including zeros and wide magnitudes.
  double magnitude() {
    switch (integer(0, 9)) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2: return log_uniform(1e-300, 1e300);
      default: return log_uniform(1e-6, 1e6);
    }
  }
};

}  // namespace oracle
