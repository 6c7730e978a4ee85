#include "vtx/exact_core/scaled_exponent.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace vtx {

ScaledExponent::ScaledExponent(int64_t numerator, int64_t scale) {
  if (scale <= 0) throw std::domain_error("ScaledExponent: scale must be positive");
  const int64_t g = std::gcd(numerator, scale);
  num_ = numerator / g;
  scale_ = scale / g;
}

ScaledExponent ScaledExponent::parse(std::string_view text) {
  return from_rational(Rational::parse(text));
}

ScaledExponent ScaledExponent::from_rational(const Rational& r) {
  const mpz_class n = r.numerator(), d = r.denominator();
  if (!n.fits_slong_p() || !d.fits_slong_p()) throw std::overflow_error("ScaledExponent: out of range");
  return ScaledExponent(n.get_si(), d.get_si());
}

int64_t ScaledExponent::floor() const {
  int64_t q = num_ / scale_;
  if (num_ % scale_ != 0 && num_ < 0) --q;
  return q;
}

int64_t ScaledExponent::ceil() const { return -(-*this).floor(); }

int64_t ScaledExponent::as_integer() const {
  if (scale_ != 1) throw std::domain_error("ScaledExponent: " + str() + " is not an integer");
  return num_;
}

std::string ScaledExponent::str() const {
  if (scale_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(scale_);
}

ScaledExponent operator+(const ScaledExponent& a, const ScaledExponent& b) {
  if (a.scale_ == b.scale_) return ScaledExponent(a.num_ + b.num_, a.scale_);
  const int64_t l = std::lcm(a.scale_, b.scale_);
  return ScaledExponent(a.num_ * (l / a.scale_) + b.num_ * (l / b.scale_), l);
}

std::strong_ordering operator<=>(const ScaledExponent& a, const ScaledExponent& b) {
  // Cross-multiplication is exact for the small scales used here.
  return static_cast<__int128>(a.num_) * b.scale_ <=> static_cast<__int128>(b.num_) * a.scale_;
}

std::ostream& operator<<(std::ostream& os, const ScaledExponent& e) { return os << e.str(); }

}  // namespace vtx
