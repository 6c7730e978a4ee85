#pragma once

#include "vtx/exact_core/rational.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vtx {

/// An exponent or mode index in (1/T)Z, stored as numerator/scale in lowest terms.
///
/// Integer values always carry scale 1. Two exponents with different scales
/// combine over the lcm of their scales and are then reduced again.
class ScaledExponent {
 public:
  constexpr ScaledExponent() = default;
  constexpr ScaledExponent(int64_t n) : num_(n), scale_(1) {}  // NOLINT(implicit)
  ScaledExponent(int64_t numerator, int64_t scale);

  /// Parses "n" or "n/T".
  static ScaledExponent parse(std::string_view text);
  /// Converts an exact rational whose denominator fits in 64 bits.
  static ScaledExponent from_rational(const Rational& r);

  [[nodiscard]] int64_t numerator() const { return num_; }
  [[nodiscard]] int64_t scale() const { return scale_; }
  [[nodiscard]] bool is_integer() const { return scale_ == 1; }
  [[nodiscard]] Rational to_rational() const { return Rational(num_, scale_); }
  /// Largest integer <= value.
  [[nodiscard]] int64_t floor() const;
  /// Smallest integer >= value.
  [[nodiscard]] int64_t ceil() const;
  /// Integer value; throws std::domain_error when not integral.
  [[nodiscard]] int64_t as_integer() const;
  /// Fractional part in [0,1).
  [[nodiscard]] ScaledExponent frac() const { return *this - ScaledExponent(floor()); }

  [[nodiscard]] std::string str() const;

  ScaledExponent operator-() const { return ScaledExponent(-num_, scale_); }
  friend ScaledExponent operator+(const ScaledExponent& a, const ScaledExponent& b);
  friend ScaledExponent operator-(const ScaledExponent& a, const ScaledExponent& b) { return a + (-b); }
  friend ScaledExponent operator*(const ScaledExponent& a, int64_t k) { return ScaledExponent(a.num_ * k, a.scale_); }
  ScaledExponent& operator+=(const ScaledExponent& o) { return *this = *this + o; }
  ScaledExponent& operator-=(const ScaledExponent& o) { return *this = *this - o; }

  friend bool operator==(const ScaledExponent&, const ScaledExponent&) = default;
  friend std::strong_ordering operator<=>(const ScaledExponent& a, const ScaledExponent& b);

 private:
  int64_t num_ = 0;
  int64_t scale_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ScaledExponent& e);

}  // namespace vtx
