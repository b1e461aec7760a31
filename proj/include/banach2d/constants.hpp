#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "banach2d/ext_real.hpp"
#include "banach2d/means.hpp"
#include "banach2d/norm_space.hpp"
#include "banach2d/search.hpp"

namespace banach2d {

enum class MethodChoice { automatic, exact, grid };

inline std::string_view to_string(MethodChoice m) {
  switch (m) {
    case MethodChoice::automatic: return "auto";
    case MethodChoice::exact: return "exact";
    case MethodChoice::grid: return "grid";
  }
  return "?";
}

/// Raised when the exact extreme-point path is requested but not licensed.
class MethodUnavailable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConstantRequest {
  NormSpace space;
  ExtReal t{1.0};
  double tau{1.0};
  MethodChoice method{MethodChoice::automatic};
  SearchConfig cfg{};
};

struct ConstantValue {
  double value{0.0};
  std::optional<std::pair<Vec2, Vec2>> witnesses;
  Method method_used{Method::grid};
  std::optional<double> tau_star;  // maximizing tau for suprema over tau
};

namespace detail {

/// Why the extreme-point path cannot be used, or empty when it can.
/// Maximizing over ext(B_X) is justified when the objective is a
/// nondecreasing function of a sum of t-th powers of norms with t >= 1
/// (each power is then convex in each vector).
inline std::optional<std::string> exact_unavailable(const NormSpace& space, const ExtReal& t) {
  if (!t.is_finite() || t.value() < 1.0) {
    return "exact method requires a finite t >= 1 (got t = " + t.to_string() + ")";
  }
  if (!extreme_points(space)) {
    return "exact method requires a polytopal unit ball; " + space.label() + " has no finite extreme point list";
  }
  return std::nullopt;
}

inline bool use_exact(const NormSpace& space, const ExtReal& t, MethodChoice method) {
  const auto why = exact_unavailable(space, t);
  switch (method) {
    case MethodChoice::exact:
      if (why) throw MethodUnavailable(*why);
      return true;
    case MethodChoice::grid:
      return false;
    case MethodChoice::automatic:
      return !why;
  }
  return false;
}

template <class Objective>
ConstantValue enumerate_extreme_pairs(const NormSpace& space, Objective&& f) {
  const auto ext = *extreme_points(space);
  ConstantValue out;
  out.method_used = Method::exact;
  out.value = -std::numeric_limits<double>::infinity();
  for (const auto& a : ext) {
    for (const auto& b : ext) {
      const double v = f(a, b);
      if (v > out.value) {
        out.value = v;
        out.witnesses = std::make_pair(a, b);
      }
    }
  }
  return out;
}

template <class Objective>
ConstantValue pair_supremum(const NormSpace& space, Objective&& f, bool exact, const SearchConfig& cfg) {
  if (exact) return enumerate_extreme_pairs(space, f);
  const SearchResult r = pair_maximize(space, f, cfg);
  ConstantValue out;
  out.value = r.value;
  out.witnesses = std::make_pair(r.x1, r.x2);
  out.method_used = Method::grid;
  return out;
}

inline void require_tau(double tau, const char* who) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::invalid_argument(std::string(who) + ": tau must be finite and >= 0");
  }
}

}  // namespace detail

/// Skew mean objective M_t(||x1 + tau x2||, ||tau x1 - x2||).
inline double skew_objective(const NormSpace& space, const ExtReal& t, double tau, const Vec2& x1, const Vec2& x2) {
  return generalized_mean(t, space.norm(x1 + tau * x2), space.norm(tau * x1 - x2));
}

/// Symmetric objective M_t(||x1 + tau x2||, ||x1 - tau x2||).
inline double james_type_objective(const NormSpace& space, const ExtReal& t, double tau, const Vec2& x1,
                                   const Vec2& x2) {
  return generalized_mean(t, space.norm(x1 + tau * x2), space.norm(x1 - tau * x2));
}

/**
 * Skew James type constant
 *
 *   J_t[tau, X] = sup { M_t(||x1 + tau x2||, ||tau x1 - x2||) : x1, x2 in S_X }.
 *
 * With method `automatic`, polytopal balls and finite t >= 1 go through the
 * exact enumeration of extreme-point pairs; everything else through
 * pair_maximize. Asking for `exact` where it is not licensed throws
 * MethodUnavailable.
 */
inline ConstantValue skew_james(const ConstantRequest& req) {
  detail::require_tau(req.tau, "skew_james");
  req.cfg.validate();
  const bool exact = detail::use_exact(req.space, req.t, req.method);
  const auto& space = req.space;
  const ExtReal t = req.t;
  const double tau = req.tau;
  return detail::pair_supremum(
      space, [&](const Vec2& a, const Vec2& b) { return skew_objective(space, t, tau, a, b); }, exact, req.cfg);
}

inline ConstantValue skew_james(const NormSpace& space, const ExtReal& t, double tau,
                                MethodChoice method = MethodChoice::automatic, const SearchConfig& cfg = {}) {
  return skew_james(ConstantRequest{space, t, tau, method, cfg});
}

/// Takahashi's James type constant J_{X,t}(tau); equals skew_james at tau = 1.
inline ConstantValue james_type(const NormSpace& space, const ExtReal& t, double tau,
                                MethodChoice method = MethodChoice::automatic, const SearchConfig& cfg = {}) {
  detail::require_tau(tau, "james_type");
  cfg.validate();
  const bool exact = detail::use_exact(space, t, method);
  return detail::pair_supremum(
      space, [&](const Vec2& a, const Vec2& b) { return james_type_objective(space, t, tau, a, b); }, exact, cfg);
}

/// J(X) = sup min(||x1 + x2||, ||x1 - x2||). Always searched on the grid.
inline ConstantValue james_constant(const NormSpace& space, const SearchConfig& cfg = {}) {
  return skew_james(space, ExtReal::neg_inf(), 1.0, MethodChoice::grid, cfg);
}

/// Uniform non-squareness test on a computed James constant.
inline bool is_uniformly_non_square(const ConstantValue& james, double tol) { return james.value < 2.0 - tol; }

/// Skew James constant of Fu et al., J[tau, X] = J_{-inf}[tau, X].
inline ConstantValue fu_skew_james(const NormSpace& space, double tau, const SearchConfig& cfg = {}) {
  return skew_james(space, ExtReal::neg_inf(), tau, MethodChoice::automatic, cfg);
}

/// A_2(X) = J_{X,1}(1).
inline ConstantValue a2_constant(const NormSpace& space, const SearchConfig& cfg = {}) {
  return james_type(space, 1.0, 1.0, MethodChoice::automatic, cfg);
}

/// T(X) = J_{X,0}(1) (Alonso-Llorens-Fuster).
inline ConstantValue alonso_llorens_fuster_constant(const NormSpace& space, const SearchConfig& cfg = {}) {
  return james_type(space, 0.0, 1.0, MethodChoice::automatic, cfg);
}

/// Gao's E(X) = 2 J_{X,2}(1)^2.
inline double gao_constant(const NormSpace& space, const SearchConfig& cfg = {}) {
  const double j = james_type(space, 2.0, 1.0, MethodChoice::automatic, cfg).value;
  return 2.0 * j * j;
}

/// Skew Gao parameter E[tau, X] = 2 (J_2[tau, X])^2.
inline double gao_skew(const NormSpace& space, double tau, const SearchConfig& cfg = {}) {
  const double j = skew_james(space, 2.0, tau, MethodChoice::automatic, cfg).value;
  return 2.0 * j * j;
}

/// delta_X(eps); see constrained_infimum.
inline double modulus_of_convexity(const NormSpace& space, double eps, const SearchConfig& cfg = {}) {
  return constrained_infimum(space, eps, cfg).value;
}

/// delta values at or below this count as zero for the convexity coefficient.
inline constexpr double kModulusZeroTol = 1e-6;

/**
 * Goebel's convexity coefficient eps_0(X) = sup { eps : delta_X(eps) = 0 }.
 * Scans a 201-point eps grid, then bisects the first bracket where delta
 * leaves zero down to cfg.tol. Returns the largest eps known to have
 * delta <= kModulusZeroTol.
 */
inline double convexity_coefficient(const NormSpace& space, const SearchConfig& cfg = {}) {
  constexpr int kPoints = 201;
  std::vector<double> eps(kPoints);
  for (int k = 0; k < kPoints; ++k) eps[static_cast<std::size_t>(k)] = 2.0 * k / (kPoints - 1);
  const auto profile = modulus_profile(space, eps, cfg);
  std::size_t first_positive = eps.size();
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (profile[k].value > kModulusZeroTol) {
      first_positive = k;
      break;
    }
  }
  if (first_positive == eps.size()) return 2.0;
  if (first_positive == 0) return 0.0;
  double lo = eps[first_positive - 1];
  double hi = eps[first_positive];
  while (hi - lo > cfg.tol) {
    const double mid = 0.5 * (lo + hi);
    if (modulus_of_convexity(space, mid, cfg) <= kModulusZeroTol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace detail {

/**
 * sup over tau in [0, 1] of J(tau)^2 / (1 + tau^2) where J(tau) comes from
 * `inner`: a 201-point tau grid, then 40 golden-section steps on the
 * bracket around the best grid point.
 */
template <class Inner>
ConstantValue tau_supremum(Inner&& inner) {
  constexpr int kGrid = 201;
  constexpr int kGolden = 40;
  ConstantValue best;
  best.value = -std::numeric_limits<double>::infinity();
  auto eval = [&](double tau) {
    ConstantValue j = inner(tau);
    const double ratio = j.value * j.value / (1.0 + tau * tau);
    if (ratio > best.value) {
      best.value = ratio;
      best.witnesses = j.witnesses;
      best.method_used = j.method_used;
      best.tau_star = tau;
    }
    return ratio;
  };
  int best_k = 0;
  double best_grid = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGrid; ++k) {
    const double r = eval(static_cast<double>(k) / (kGrid - 1));
    if (r > best_grid) {
      best_grid = r;
      best_k = k;
    }
  }
  double a = static_cast<double>(std::max(best_k - 1, 0)) / (kGrid - 1);
  double b = static_cast<double>(std::min(best_k + 1, kGrid - 1)) / (kGrid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 2; it < kGolden; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  return best;
}

}  // namespace detail

/// G_t(X) = sup over tau in [0, 1] of (J_t[tau, X])^2 / (1 + tau^2).
inline ConstantValue g_constant(const NormSpace& space, const ExtReal& t, const SearchConfig& cfg = {}) {
  return detail::tau_supremum(
      [&](double tau) { return skew_james(space, t, tau, MethodChoice::automatic, cfg); });
}

/// C_t(X) = sup over tau in [0, 1] of J_{X,t}(tau)^2 / (1 + tau^2).
inline ConstantValue c_t_constant(const NormSpace& space, const ExtReal& t, const SearchConfig& cfg = {}) {
  return detail::tau_supremum(
      [&](double tau) { return james_type(space, t, tau, MethodChoice::automatic, cfg); });
}

/// von Neumann-Jordan constant C_NJ(X) = C_2(X).
inline ConstantValue von_neumann_jordan_constant(const NormSpace& space, const SearchConfig& cfg = {}) {
  return c_t_constant(space, 2.0, cfg);
}

/// Zbaganu constant C_Z(X) = C_0(X).
inline ConstantValue zbaganu_constant(const NormSpace& space, const SearchConfig& cfg = {}) {
  return c_t_constant(space, 0.0, cfg);
}

/**
 * L'_YJ(lambda, mu, X) = sup (||lambda x1 + mu x2||^2 + ||mu x1 - lambda x2||^2) / (2 (lambda^2 + mu^2))
 * over unit x1, x2. Squared norms are convex in each vector, so polytopal
 * balls use the extreme-point enumeration.
 */
inline double lyj_constant(const NormSpace& space, double lambda, double mu, const SearchConfig& cfg = {}) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || lambda < 0.0 || mu < 0.0) {
    throw std::invalid_argument("lyj_constant: lambda and mu must be finite and >= 0");
  }
  if (lambda == 0.0 && mu == 0.0) throw std::invalid_argument("lyj_constant: lambda and mu cannot both be 0");
  cfg.validate();
  const double denom = 2.0 * (lambda * lambda + mu * mu);
  auto f = [&](const Vec2& a, const Vec2& b) {
    const double p = space.norm(lambda * a + mu * b);
    const double q = space.norm(mu * a - lambda * b);
    return (p * p + q * q) / denom;
  };
  return detail::pair_supremum(space, f, extreme_points(space).has_value(), cfg).value;
}

/**
 * Upper bound on G_{-inf}(X) in terms of the James constant J in [1, 2]:
 *
 *   (J-1)^2 + 4 (J-1)^2 a / ((J^2 - 2J + a)^2 + 4 (J-1)^2),
 *   a = sqrt((2J - J^2)^2 + 4 (J-1)^2).
 *
 * The quotient is 0/0 at J = 1, where the limit 1 is returned.
 */
inline double thm33_bound(double james) {
  if (!(james >= 1.0 - 1e-12 && james <= 2.0 + 1e-12)) {
    throw std::invalid_argument("thm33_bound: James constant must lie in [1, 2]");
  }
  const double j = std::clamp(james, 1.0, 2.0);
  const double s = (j - 1.0) * (j - 1.0);
  if (s == 0.0) return 1.0;
  const double u = 2.0 * j - j * j;
  const double a = std::sqrt(u * u + 4.0 * s);
  const double w = j * j - 2.0 * j + a;
  return s + 4.0 * s * a / (w * w + 4.0 * s);
}

}  // namespace banach2d
