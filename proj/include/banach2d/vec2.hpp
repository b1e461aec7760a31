#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace banach2d {

/// A point of the real plane. Components are always finite.
struct Vec2 {
  double x1{0.0};
  double x2{0.0};

  constexpr Vec2() = default;
  constexpr Vec2(double a, double b) : x1(a), x2(b) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x1 + o.x1, x2 + o.x2}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x1 - o.x1, x2 - o.x2}; }
  constexpr Vec2 operator-() const { return {-x1, -x2}; }
  constexpr Vec2 operator*(double s) const { return {s * x1, s * x2}; }
  constexpr Vec2 operator/(double s) const { return {x1 / s, x2 / s}; }
  constexpr bool operator==(const Vec2&) const = default;

  bool finite() const { return std::isfinite(x1) && std::isfinite(x2); }
  constexpr bool is_zero() const { return x1 == 0.0 && x2 == 0.0; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x1 * b.x1 + a.x2 * b.x2; }

/// z-component of the 3D cross product.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x1 * b.x2 - a.x2 * b.x1; }

inline void require_finite(const Vec2& v, const char* what) {
  if (!v.finite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite vector component");
  }
}

}  // namespace banach2d
