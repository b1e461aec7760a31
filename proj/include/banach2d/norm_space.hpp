#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "banach2d/vec2.hpp"

namespace banach2d {

enum class BuiltinId { hexagon, l1_linf_hybrid, day_james_l2_l1 };

inline std::string_view to_string(BuiltinId id) {
  switch (id) {
    case BuiltinId::hexagon: return "hexagon";
    case BuiltinId::l1_linf_hybrid: return "l1_linf_hybrid";
    case BuiltinId::day_james_l2_l1: return "day_james_l2_l1";
  }
  return "?";
}

inline std::optional<BuiltinId> parse_builtin_id(std::string_view s) {
  if (s == "hexagon") return BuiltinId::hexagon;
  if (s == "l1_linf_hybrid") return BuiltinId::l1_linf_hybrid;
  if (s == "day_james_l2_l1") return BuiltinId::day_james_l2_l1;
  return std::nullopt;
}

namespace detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angle of v in [0, 2pi).
inline double angle_of(const Vec2& v) {
  double a = std::atan2(v.x2, v.x1);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

/// Representative of {v, -v} in the half-plane x2 > 0 or (x2 == 0, x1 >= 0).
/// Evaluating only on this half makes every norm exactly even.
inline Vec2 upper_half(const Vec2& v) {
  if (v.x2 < 0.0 || (v.x2 == 0.0 && v.x1 < 0.0)) return -v;
  return v;
}

inline double hypot2(const Vec2& v) { return std::hypot(v.x1, v.x2); }

/// Strict convex hull (no collinear points) of a point set, counterclockwise,
/// sorted by polar angle starting from the smallest angle in [0, 2pi).
inline std::vector<Vec2> strict_hull_by_angle(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  // A turn is counted as collinear when it is within rounding of zero
  // relative to the two edge lengths.
  auto left_turn = [](const Vec2& o, const Vec2& a, const Vec2& b) {
    const Vec2 u = a - o;
    const Vec2 w = b - a;
    return cross(u, w) > 1e-12 * hypot2(u) * hypot2(w);
  };
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && !left_turn(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  std::sort(hull.begin(), hull.end(),
            [](const Vec2& a, const Vec2& b) { return angle_of(a) < angle_of(b); });
  return hull;
}

}  // namespace detail

/**
 * A norm on the plane. Values are immutable after construction, cheap to
 * copy (constituents of hybrids are shared) and safe to use from several
 * threads at once.
 *
 * Construction validates the structural invariants of the descriptor and
 * throws std::invalid_argument on violation; evaluation never throws.
 */
class NormSpace {
 public:
  enum class Kind { polytopal, pnorm, quadrant_hybrid, hexagon };

  /// Unit ball = convex hull of the given vertices and their negatives.
  static NormSpace polytopal(const std::vector<Vec2>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("polytopal norm: vertex list is empty");
    std::vector<Vec2> input;
    for (const auto& v : vertices) {
      require_finite(v, "polytopal norm");
      if (v.is_zero()) throw std::invalid_argument("polytopal norm: zero vertex");
      bool antipode_seen = false;
      for (const auto& w : input) {
        const double scale = detail::hypot2(v) * detail::hypot2(w);
        if (std::abs(cross(v, w)) <= 1e-12 * scale) {
          // An exact antipode adds nothing to a symmetric hull.
          if (detail::hypot2(v + w) <= 1e-12 * detail::hypot2(v)) {
            antipode_seen = true;
            break;
          }
          throw std::invalid_argument("polytopal norm: vertices must be pairwise non-proportional");
        }
      }
      if (!antipode_seen) input.push_back(v);
    }

    std::vector<Vec2> sym;
    for (const auto& v : input) {
      sym.push_back(v);
      sym.push_back(-v);
    }
    Polytope poly;
    poly.hull = detail::strict_hull_by_angle(sym);
    const std::size_t n = poly.hull.size();
    if (n < 4) {
      throw std::invalid_argument("polytopal norm: hull of +-vertices has empty interior");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = poly.hull[i];
      const Vec2& b = poly.hull[(i + 1) % n];
      const double c = cross(a, b);
      if (!(c > 1e-12 * detail::hypot2(a) * detail::hypot2(b))) {
        throw std::invalid_argument("polytopal norm: origin is not strictly inside the hull");
      }
      poly.angles.push_back(detail::angle_of(a));
      // Functional equal to 1 on both edge endpoints.
      poly.normals.push_back(Vec2{b.x2 - a.x2, a.x1 - b.x1} / c);
    }
    NormSpace s;
    s.rep_ = std::move(poly);
    return s;
  }

  /// Classical l_p norm, p in [1, inf]; pass +infinity for the max norm.
  static NormSpace pnorm(double p) {
    if (std::isnan(p) || p < 1.0) throw std::invalid_argument("pnorm: exponent must satisfy p >= 1");
    NormSpace s;
    s.rep_ = PNorm{p};
    return s;
  }

  /// Norm `same_sign` where x1*x2 >= 0 and `opposite_sign` where x1*x2 < 0.
  static NormSpace quadrant_hybrid(const NormSpace& same_sign, const NormSpace& opposite_sign) {
    for (const Vec2 axis : {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}) {
      const double a = same_sign.norm(axis);
      const double b = opposite_sign.norm(axis);
      if (std::abs(a - b) > 1e-12 * std::max(a, b)) {
        throw std::invalid_argument("quadrant hybrid: constituent norms disagree on a coordinate axis");
      }
    }
    NormSpace s;
    s.rep_ = Hybrid{std::make_shared<const NormSpace>(same_sign),
                    std::make_shared<const NormSpace>(opposite_sign)};
    return s;
  }

  static NormSpace builtin(BuiltinId id) {
    NormSpace s;
    switch (id) {
      case BuiltinId::hexagon:
        s.rep_ = Hexagon{};
        break;
      case BuiltinId::l1_linf_hybrid:
        s = quadrant_hybrid(pnorm(std::numeric_limits<double>::infinity()), pnorm(1.0));
        break;
      case BuiltinId::day_james_l2_l1:
        s = quadrant_hybrid(pnorm(2.0), pnorm(1.0));
        break;
    }
    s.builtin_ = id;
    return s;
  }

  static NormSpace hexagon() { return builtin(BuiltinId::hexagon); }
  static NormSpace l1_linf_hybrid() { return builtin(BuiltinId::l1_linf_hybrid); }
  static NormSpace day_james() { return builtin(BuiltinId::day_james_l2_l1); }
  static NormSpace euclidean() { return pnorm(2.0); }
  static NormSpace max_norm() { return pnorm(std::numeric_limits<double>::infinity()); }

  Kind kind() const {
    if (std::holds_alternative<Polytope>(rep_)) return Kind::polytopal;
    if (std::holds_alternative<PNorm>(rep_)) return Kind::pnorm;
    if (std::holds_alternative<Hybrid>(rep_)) return Kind::quadrant_hybrid;
    return Kind::hexagon;
  }

  std::optional<BuiltinId> builtin_id() const { return builtin_; }

  /// Exponent of a PNorm descriptor.
  std::optional<double> p() const {
    if (const auto* pn = std::get_if<PNorm>(&rep_)) return pn->p;
    return std::nullopt;
  }

  const NormSpace* same_sign() const {
    if (const auto* h = std::get_if<Hybrid>(&rep_)) return h->same.get();
    return nullptr;
  }
  const NormSpace* opposite_sign() const {
    if (const auto* h = std::get_if<Hybrid>(&rep_)) return h->opposite.get();
    return nullptr;
  }

  /// Vertices of a polytopal descriptor's unit ball (counterclockwise).
  const std::vector<Vec2>* polytope_vertices() const {
    if (const auto* poly = std::get_if<Polytope>(&rep_)) return &poly->hull;
    return nullptr;
  }

  std::string label() const {
    if (builtin_) return std::string(to_string(*builtin_));
    return std::visit(
        [](const auto& r) -> std::string {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, Polytope>) {
            return "polytopal[" + std::to_string(r.hull.size()) + "]";
          } else if constexpr (std::is_same_v<R, PNorm>) {
            if (std::isinf(r.p)) return "pnorm:inf";
            char buf[32];
            std::snprintf(buf, sizeof buf, "pnorm:%.12g", r.p);
            return buf;
          } else if constexpr (std::is_same_v<R, Hybrid>) {
            return "hybrid(" + r.same->label() + "," + r.opposite->label() + ")";
          } else {
            return "hexagon";
          }
        },
        rep_);
  }

  /// Gauge of v; exactly even, homogeneous up to rounding, zero only at 0.
  double norm(const Vec2& v_in) const {
    const Vec2 v = detail::upper_half(v_in);
    return std::visit([&](const auto& r) { return eval(r, v); }, rep_);
  }

  double operator()(const Vec2& v) const { return norm(v); }

 private:
  struct Polytope {
    std::vector<Vec2> hull;      // counterclockwise, angles ascending in [0, 2pi)
    std::vector<double> angles;  // polar angle of hull[i]
    std::vector<Vec2> normals;   // normals[i] . x == 1 on edge hull[i] -> hull[i+1]
  };
  struct PNorm {
    double p;
  };
  struct Hybrid {
    std::shared_ptr<const NormSpace> same;
    std::shared_ptr<const NormSpace> opposite;
  };
  struct Hexagon {};

  static double eval(const Polytope& poly, const Vec2& v) {
    if (v.is_zero()) return 0.0;
    const double a = detail::angle_of(v);
    auto it = std::upper_bound(poly.angles.begin(), poly.angles.end(), a);
    const std::size_t edge =
        it == poly.angles.begin() ? poly.angles.size() - 1
                                  : static_cast<std::size_t>(it - poly.angles.begin()) - 1;
    return std::max(0.0, dot(poly.normals[edge], v));
  }

  static double eval(const PNorm& pn, const Vec2& v) {
    const double a = std::abs(v.x1);
    const double b = std::abs(v.x2);
    if (pn.p == 1.0) return a + b;
    if (pn.p == 2.0) return std::hypot(a, b);
    const double hi = std::max(a, b);
    if (std::isinf(pn.p) || hi == 0.0) return hi;
    const double r = std::min(a, b) / hi;
    return hi * std::pow(1.0 + std::pow(r, pn.p), 1.0 / pn.p);
  }

  static double eval(const Hybrid& h, const Vec2& v) {
    return v.x1 * v.x2 >= 0.0 ? h.same->norm(v) : h.opposite->norm(v);
  }

  static double eval(const Hexagon&, const Vec2& v) {
    const double s = v.x2 / std::numbers::sqrt3;
    return std::max({std::abs(v.x1 + s), std::abs(v.x1 - s), 2.0 * std::abs(s)});
  }

  std::variant<Polytope, PNorm, Hybrid, Hexagon> rep_{PNorm{2.0}};
  std::optional<BuiltinId> builtin_;
};

inline double norm(const NormSpace& space, const Vec2& v) { return space.norm(v); }

/// Unit-sphere point in direction (cos theta, sin theta); theta is reduced
/// to [0, 2pi) first, so every real angle is accepted.
inline Vec2 sphere_point(const NormSpace& space, double theta) {
  double th = std::fmod(theta, detail::kTwoPi);
  if (th < 0.0) th += detail::kTwoPi;
  if (th >= detail::kTwoPi) th = 0.0;
  const Vec2 d{std::cos(th), std::sin(th)};
  return d / space.norm(d);
}

/**
 * Full symmetric vertex list of the unit ball, counterclockwise from the
 * smallest polar angle in [0, 2pi). Absent for balls with curved boundary
 * (l_p for 1 < p < inf, or a hybrid with such a piece).
 */
inline std::optional<std::vector<Vec2>> extreme_points(const NormSpace& space) {
  using K = NormSpace::Kind;
  switch (space.kind()) {
    case K::polytopal:
      return *space.polytope_vertices();
    case K::hexagon: {
      const double h = std::numbers::sqrt3 / 2.0;
      return std::vector<Vec2>{{1.0, 0.0}, {0.5, h}, {-0.5, h}, {-1.0, 0.0}, {-0.5, -h}, {0.5, -h}};
    }
    case K::pnorm: {
      const double p = *space.p();
      if (p == 1.0) return std::vector<Vec2>{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
      if (std::isinf(p)) return std::vector<Vec2>{{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}};
      return std::nullopt;
    }
    case K::quadrant_hybrid: {
      const auto same = extreme_points(*space.same_sign());
      const auto opp = extreme_points(*space.opposite_sign());
      if (!same || !opp) return std::nullopt;
      // The hybrid ball agrees with the same-sign ball on closed quadrants
      // I and III and with the other ball on II and IV, so its vertices are
      // among the open-quadrant vertices of each piece and the axis points.
      std::vector<Vec2> cand;
      for (const auto& v : *same)
        if (v.x1 * v.x2 > 0.0) cand.push_back(v);
      for (const auto& v : *opp)
        if (v.x1 * v.x2 < 0.0) cand.push_back(v);
      const double e1 = 1.0 / space.norm({1.0, 0.0});
      const double e2 = 1.0 / space.norm({0.0, 1.0});
      cand.insert(cand.end(), {{e1, 0.0}, {0.0, e2}, {-e1, 0.0}, {0.0, -e2}});
      auto hull = detail::strict_hull_by_angle(std::move(cand));
      if (hull.size() < 4) return std::nullopt;
      return hull;
    }
  }
  return std::nullopt;
}

struct NormViolation {
  enum class Kind { symmetry, homogeneity, triangle, positivity };
  Kind kind;
  Vec2 u;
  Vec2 v;        // second witness (triangle) or (lambda, 0) for homogeneity
  double lhs;
  double rhs;
};

inline std::string_view to_string(NormViolation::Kind k) {
  switch (k) {
    case NormViolation::Kind::symmetry: return "symmetry";
    case NormViolation::Kind::homogeneity: return "homogeneity";
    case NormViolation::Kind::triangle: return "triangle";
    case NormViolation::Kind::positivity: return "positivity";
  }
  return "?";
}

struct NormValidationReport {
  bool ok{true};
  std::size_t checks{0};
  std::size_t violation_count{0};
  std::vector<NormViolation> violations;  // first kMaxListed witnesses

  static constexpr std::size_t kMaxListed = 32;
};

/**
 * Spot-checks the norm axioms on a deterministic sample: `samples` random
 * pairs (fixed-seed splitmix64 stream) plus `samples` pairs of nearby
 * sphere points. Never throws; bad descriptors come back as a failing report.
 */
inline NormValidationReport validate_norm(const NormSpace& space, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("validate_norm: samples must be >= 1");
  NormValidationReport rep;
  auto record = [&](NormViolation::Kind k, Vec2 u, Vec2 v, double lhs, double rhs) {
    rep.ok = false;
    ++rep.violation_count;
    if (rep.violations.size() < NormValidationReport::kMaxListed) {
      rep.violations.push_back({k, u, v, lhs, rhs});
    }
  };

  std::uint64_t state = 0x5eed5eed1234abcdULL;
  auto next_unit = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;  // [0, 1)
  };
  auto random_vec = [&]() {
    const double scale = std::exp(6.0 * next_unit() - 3.0);
    return Vec2{scale * (2.0 * next_unit() - 1.0), scale * (2.0 * next_unit() - 1.0)};
  };

  auto check_pair = [&](const Vec2& u, const Vec2& v) {
    const double nu = space.norm(u);
    const double nv = space.norm(v);
    rep.checks += 3;
    if (space.norm(-u) != nu) record(NormViolation::Kind::symmetry, u, -u, space.norm(-u), nu);
    if (!u.is_zero() && !(nu > 0.0)) record(NormViolation::Kind::positivity, u, u, nu, 0.0);
    const double nuv = space.norm(u + v);
    const double bound = nu + nv;
    if (nuv > bound + 1e-12 * std::max(1.0, bound)) {
      record(NormViolation::Kind::triangle, u, v, nuv, bound);
    }
  };

  for (std::size_t k = 0; k < samples; ++k) {
    const Vec2 u = random_vec();
    const Vec2 v = random_vec();
    check_pair(u, v);
    const double lambda = 10.0 * next_unit() - 5.0;
    const double scaled = space.norm(u * lambda);
    const double expect = std::abs(lambda) * space.norm(u);
    ++rep.checks;
    if (std::abs(scaled - expect) > 1e-12 * std::max(1.0, expect)) {
      record(NormViolation::Kind::homogeneity, u, Vec2{lambda, 0.0}, scaled, expect);
    }
  }
  // Neighbouring sphere points expose local non-convexity of the ball.
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = detail::kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const double step = detail::kTwoPi / static_cast<double>(4 * samples + 8);
    check_pair(sphere_point(space, th - step), sphere_point(space, th + step));
  }
  return rep;
}

}  // namespace banach2d
