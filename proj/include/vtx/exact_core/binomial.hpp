#pragma once

#include "vtx/exact_core/formal_series.hpp"
#include "vtx/exact_core/rational.hpp"
#include "vtx/exact_core/scaled_exponent.hpp"

#include <cstdint>
#include <string>

namespace vtx {

/// Generalized binomial coefficient l(l-1)...(l-i+1)/i!. Zero for i < 0.
Rational binomial_coefficient(const Rational& l, int64_t i);
inline Rational binomial_coefficient(const ScaledExponent& l, int64_t i) {
  return binomial_coefficient(l.to_rational(), i);
}

/// (first + second)^l expanded in nonnegative integral powers of `second`,
/// keeping the terms second^0 .. second^max_order.
///
/// The series lives in the variables {first, second} (that order). For a
/// nonnegative integer l not exceeding max_order the expansion is exact;
/// otherwise the window of `second` stops at max_order.
FormalSeries<Rational> binomial_expand(const ScaledExponent& l, const std::string& first,
                                       const std::string& second, int64_t max_order);

/// f(x0, x2) = sum_{i=0}^{k-q-1} C(p-l, i) x0^{p-l-i} x2^i, an exact Laurent
/// polynomial in variables {x0, x2}. Requires p-l and k-q to be integers.
FormalSeries<Rational> f_poly(const ScaledExponent& p, const ScaledExponent& l, const ScaledExponent& k,
                              const ScaledExponent& q);

}  // namespace vtx
