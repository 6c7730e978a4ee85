#include "vtx/exact_core/binomial.hpp"

#include <stdexcept>

namespace vtx {

Rational binomial_coefficient(const Rational& l, int64_t i) {
  if (i < 0) return Rational(0);
  Rational acc(1);
  for (int64_t j = 0; j < i; ++j) {
    acc *= (l - Rational(j));
    acc /= Rational(j + 1);
    if (acc.is_zero()) break;
  }
  return acc;
}

FormalSeries<Rational> binomial_expand(const ScaledExponent& l, const std::string& first,
                                       const std::string& second, int64_t max_order) {
  if (max_order < 0) throw std::invalid_argument("binomial_expand: negative order");
  FormalSeries<Rational> s({first, second});
  const bool terminates = l.is_integer() && l.numerator() >= 0 && l.numerator() <= max_order;
  if (!terminates) s.set_window(1, {ScaledExponent(0), ScaledExponent(max_order)});
  else s.set_window(1, {ScaledExponent(0), std::nullopt});
  // In `first` the support is l, l-1, ...; bounded below only for terminating sums.
  if (terminates) s.set_window(0, {ScaledExponent(0), std::nullopt});
  const int64_t top = terminates ? l.numerator() : max_order;
  for (int64_t i = 0; i <= top; ++i)
    s.add_term({l - ScaledExponent(i), ScaledExponent(i)}, binomial_coefficient(l, i));
  return s;
}

FormalSeries<Rational> f_poly(const ScaledExponent& p, const ScaledExponent& l, const ScaledExponent& k,
                              const ScaledExponent& q) {
  const ScaledExponent pl = p - l, kq = k - q;
  if (!pl.is_integer() || !kq.is_integer())
    throw std::domain_error("f_poly: p-l and k-q must be integers");
  FormalSeries<Rational> s({"x0", "x2"});
  for (int64_t i = 0; i <= kq.numerator() - 1; ++i)
    s.add_term({pl - ScaledExponent(i), ScaledExponent(i)}, binomial_coefficient(pl, i));
  return s;
}

}  // namespace vtx
