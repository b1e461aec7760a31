#pragma once

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace banach2d {

/// Mean parameter on the extended real line. The infinities are tags, not
/// IEEE values, so that `t = -inf` routes to the exact minimum instead of a
/// limit computed in floating point.
class ExtReal {
 public:
  enum class Tag { neg_inf, finite, pos_inf };

  constexpr ExtReal() = default;
  ExtReal(double v) : value_(v) {  // NOLINT: implicit from double is intended
    if (!std::isfinite(v)) throw std::invalid_argument("ExtReal: use the neg_inf/pos_inf tags for infinities");
  }

  static constexpr ExtReal neg_inf() { return ExtReal(Tag::neg_inf); }
  static constexpr ExtReal pos_inf() { return ExtReal(Tag::pos_inf); }

  static ExtReal finite(double v) { return ExtReal(v); }

  constexpr Tag tag() const { return tag_; }
  constexpr bool is_finite() const { return tag_ == Tag::finite; }
  constexpr bool is_neg_inf() const { return tag_ == Tag::neg_inf; }
  constexpr bool is_pos_inf() const { return tag_ == Tag::pos_inf; }

  /// Finite payload; throws for the infinite tags.
  double value() const {
    if (!is_finite()) throw std::logic_error("ExtReal::value on an infinite tag");
    return value_;
  }

  /// Real number view with IEEE infinities for the tags.
  constexpr double as_double() const {
    switch (tag_) {
      case Tag::neg_inf: return -std::numeric_limits<double>::infinity();
      case Tag::pos_inf: return std::numeric_limits<double>::infinity();
      default: return value_;
    }
  }

  friend constexpr std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    return a.as_double() <=> b.as_double();
  }
  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::finite || a.value_ == b.value_);
  }

  /// Accepts decimal literals and "-inf", "+inf", "inf" (case-insensitive).
  static ExtReal parse(std::string_view text) {
    std::string s(text);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "-inf" || s == "-infinity") return neg_inf();
    if (s == "+inf" || s == "inf" || s == "+infinity" || s == "infinity") return pos_inf();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
      if (v == 0.0) v = 0.0;
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse t value '" + std::string(text) + "'");
    }
    if (used != s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("cannot parse t value '" + std::string(text) + "'");
    }
    return ExtReal(v);
  }

  /// Shortest decimal that round-trips, or "-inf"/"+inf".
  std::string to_string() const {
    if (tag_ == Tag::neg_inf) return "-inf";
    if (tag_ == Tag::pos_inf) return "+inf";
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof buf, "%.*g", prec, value_);
      if (std::strtod(buf, nullptr) == value_) break;
    }
    return buf;
  }

 private:
  constexpr explicit ExtReal(Tag tag) : tag_(tag) {}

  Tag tag_{Tag::finite};
  double value_{0.0};
};

}  // namespace banach2d
