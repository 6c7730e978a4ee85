#include "doctest.h"

#include "vtx/exact_core/binomial.hpp"
#include "vtx/exact_core/formal_series.hpp"

#include <map>
#include <random>

using namespace vtx;

namespace {

using S = FormalSeries<Rational>;
const std::vector<std::string> kX{"x"};
const std::vector<std::string> kX0X2{"x0", "x2"};

ScaledExponent e(int64_t n, int64_t t = 1) { return ScaledExponent(n, t); }

// Independent falling-factorial product, evaluated with raw mpq_class.
Rational falling_factorial_oracle(const mpq_class& l, int i) {
  mpq_class num = 1, den = 1;
  for (int j = 0; j < i; ++j) {
    num *= (l - j);
    den *= (j + 1);
  }
  return Rational(mpq_class(num / den));
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  Rational z(1);
  CHECK_THROWS(z /= Rational(0));
}

TEST_CASE("scaled exponents reduce and compare across scales") {
  CHECK(e(2, 4) == e(1, 2));
  CHECK(e(1, 2) + e(1, 2) == e(1));
  CHECK(e(1, 2).is_integer() == false);
  CHECK(e(-1, 2).floor() == -1);
  CHECK(e(-1, 2).ceil() == 0);
  CHECK(e(1, 3) < e(1, 2));
  CHECK(ScaledExponent::parse("3/2") == e(3, 2));
  CHECK(e(5, 2).str() == "5/2");
  CHECK_THROWS((void)e(1, 2).as_integer());
}

TEST_CASE("series_add") {
  S a(kX0X2);
  a.add_term({e(1), e(0)}, 1);
  a.add_term({e(0), e(1)}, 1);
  S b(kX0X2);
  b.add_term({e(1), e(0)}, 1);
  b.add_term({e(0), e(1)}, -1);
  const S sum = series_add(a, b);
  // Oracle: merge the coefficient maps by hand.
  std::map<Exponents, Rational> merged;
  for (const auto& [k, c] : a.terms()) merged[k] += c;
  for (const auto& [k, c] : b.terms()) merged[k] += c;
  std::erase_if(merged, [](const auto& kv) { return kv.second.is_zero(); });
  CHECK(sum.terms() == merged);
  CHECK(sum.terms().size() == 1);
  CHECK(sum.terms().at({e(1), e(0)}) == Rational(2));

  CHECK(series_add(a, S(kX0X2)) == a);
  CHECK(series_add(a, series_neg(a)).empty());
  CHECK_THROWS(series_add(a, S(kX)));
}

TEST_CASE("series_mul") {
  const S one = S::monomial(kX, {e(0)}, 1);
  S a(kX);
  a.add_term({e(-1)}, 2);
  a.add_term({e(3)}, 5);
  CHECK(series_mul(a, one) == a);

  const S half = S::monomial(kX, {e(1, 2)}, 1);
  CHECK(series_mul(half, half) == S::monomial(kX, {e(1)}, 1));

  // (1+x)^2 * (1+x)^{-1} truncated at x^4 equals 1+x up to x^4.
  S sq(kX);
  sq.add_term({e(0)}, 1);
  sq.add_term({e(1)}, 2);
  sq.add_term({e(2)}, 1);
  sq.set_window(0, {e(0), std::nullopt});
  S inv(kX);
  for (int i = 0; i <= 4; ++i) inv.add_term({e(i)}, (i % 2 == 0) ? 1 : -1);
  inv.set_window(0, {e(0), e(4)});
  const S prod = series_mul(sq, inv);
  // Brute-force convolution oracle.
  std::map<int, Rational> conv;
  const int a_c[] = {1, 2, 1};
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 4; ++j)
      if (i + j <= 4) conv[i + j] += Rational(a_c[i] * ((j % 2 == 0) ? 1 : -1));
  for (int k = 0; k <= 4; ++k) CHECK(prod.coefficient({e(k)}) == conv[k]);
  CHECK(prod.coefficient({e(0)}) == Rational(1));
  CHECK(prod.coefficient({e(1)}) == Rational(1));
  CHECK(prod.coefficient({e(3)}) == Rational(0));
  CHECK(prod.window()[0].exact_to == e(4));
  CHECK_THROWS_AS((void)prod.coefficient({e(5)}), PrecisionError);

  // Unbounded-below factor times a truncated factor has no certified window.
  S lower(kX);
  lower.add_term({e(-1)}, 1);
  lower.set_window(0, {std::nullopt, std::nullopt});
  CHECK_THROWS_AS(series_mul(lower, inv), PrecisionError);
}

TEST_CASE("series_mul is commutative and associative on exact series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> expo(-3, 3), coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    S s[3] = {S(kX0X2), S(kX0X2), S(kX0X2)};
    for (auto& x : s)
      for (int t = 0; t < 4; ++t) x.add_term({e(expo(rng), 2), e(expo(rng))}, coef(rng));
    CHECK(series_mul(s[0], s[1]) == series_mul(s[1], s[0]));
    CHECK(series_mul(series_mul(s[0], s[1]), s[2]) == series_mul(s[0], series_mul(s[1], s[2])));
  }
}

TEST_CASE("residue") {
  CHECK(residue(S::monomial(kX, {e(-1)}, 1), "x").terms().at({}) == Rational(1));
  S p(kX);
  p.add_term({e(2)}, 1);
  p.add_term({e(0)}, 3);
  CHECK(residue(p, "x").empty());

  S q(kX0X2);
  q.add_term({e(-1), e(1)}, 1);
  q.add_term({e(-2), e(0)}, 5);
  const S r = residue(q, "x0");
  CHECK(r.variables() == std::vector<std::string>{"x2"});
  CHECK(r.terms().size() == 1);
  CHECK(r.terms().at({e(1)}) == Rational(1));

  S cut(kX);
  cut.add_term({e(-3)}, 1);
  cut.set_window(0, {e(-3), e(-2)});
  CHECK_THROWS_AS(residue(cut, "x"), PrecisionError);
}

TEST_CASE("derivative kills residues") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> expo(-6, 6), coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    S s(kX0X2);
    for (int t = 0; t < 6; ++t) s.add_term({e(expo(rng)), e(expo(rng), 3)}, coef(rng));
    CHECK(residue(derivative(s, "x0"), "x0").empty());
  }
}

TEST_CASE("binomial_coefficient") {
  CHECK(binomial_coefficient(Rational(7, 3), 0) == Rational(1));
  CHECK(binomial_coefficient(Rational(5), 2) == Rational(10));
  CHECK(binomial_coefficient(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binomial_coefficient(Rational(3), 5) == Rational(0));
  CHECK(binomial_coefficient(Rational(3), -1) == Rational(0));
  for (int num = -7; num <= 7; ++num)
    for (int i = 0; i <= 6; ++i)
      CHECK(binomial_coefficient(Rational(num, 3), i) == falling_factorial_oracle(mpq_class(num, 3), i));
}

TEST_CASE("binomial_expand") {
  const S one = binomial_expand(e(1), "x0", "x2", 5);
  S expect(kX0X2);
  expect.add_term({e(1), e(0)}, 1);
  expect.add_term({e(0), e(1)}, 1);
  CHECK(one.terms() == expect.terms());
  CHECK(!one.window()[1].exact_to.has_value());

  const S zero = binomial_expand(e(0), "x0", "x2", 3);
  CHECK(zero.terms().size() == 1);
  CHECK(zero.terms().at({e(0), e(0)}) == Rational(1));

  // Geometric series oracle: (a+b)^{-1} = sum (-1)^i a^{-1-i} b^i.
  const S g = binomial_expand(e(-1), "x0", "x2", 2);
  S geo(kX0X2);
  for (int i = 0; i <= 2; ++i) geo.add_term({e(-1 - i), e(i)}, (i % 2 == 0) ? 1 : -1);
  CHECK(g.terms() == geo.terms());
  CHECK(g.window()[1].exact_to == e(2));

  // Integer l >= 0 agrees with the finite binomial theorem computed by repeated multiplication.
  for (int l = 0; l <= 5; ++l) {
    S acc = S::monomial(kX0X2, {e(0), e(0)}, 1);
    S lin(kX0X2);
    lin.add_term({e(1), e(0)}, 1);
    lin.add_term({e(0), e(1)}, 1);
    for (int j = 0; j < l; ++j) acc = series_mul(acc, lin);
    CHECK(binomial_expand(e(l), "x0", "x2", 8).terms() == acc.terms());
  }
}

TEST_CASE("f_poly") {
  CHECK(f_poly(e(0), e(0), e(2), e(2)).empty());
  CHECK(f_poly(e(0), e(0), e(1), e(3)).empty());
  const S single = f_poly(e(1, 2), e(5, 2), e(1), e(0));
  CHECK(single.terms().size() == 1);
  CHECK(single.terms().at({e(-2), e(0)}) == Rational(1));
  const S three = f_poly(e(-2), e(0), e(3), e(0));
  S expect(kX0X2);
  expect.add_term({e(-2), e(0)}, 1);
  expect.add_term({e(-3), e(1)}, -2);
  expect.add_term({e(-4), e(2)}, 3);
  CHECK(three.terms() == expect.terms());
  CHECK_THROWS_AS(f_poly(e(1, 2), e(0), e(1), e(0)), std::domain_error);

  // f equals the truncation of the binomial expansion to x2-powers below k-q.
  for (int pl = -3; pl <= 3; ++pl)
    for (int kq = 0; kq <= 4; ++kq) {
      const S f = f_poly(e(pl), e(0), e(kq), e(0));
      const S b = binomial_expand(e(pl), "x0", "x2", 6);
      std::map<Exponents, Rational> trunc;
      for (const auto& [k, c] : b.terms())
        if (k[1] < e(kq)) trunc[k] = c;
      CHECK(f.terms() == trunc);
    }
}
