#include "vtx/vertex_data/fock.hpp"

#include "vtx/exact_core/binomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vtx {

namespace {

void add_to(FockOracle::Vec& out, const FockOracle::State& s, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void add_scaled(FockOracle::Vec& out, const FockOracle::Vec& v, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [s, x] : v) add_to(out, s, x * c);
}

// alpha(k/T) on a state with parts in units 1/T, given k as a numerator.
FockOracle::Vec alpha_numerator(int64_t k, int64_t order, const Rational& zero_mode, const FockOracle::State& s) {
  FockOracle::Vec out;
  if (k == 0) {
    add_to(out, s, zero_mode);
  } else if (k < 0) {
    FockOracle::State t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), -k, std::greater<>()), -k);
    add_to(out, t, Rational(1));
  } else {
    const auto mult = std::count(s.begin(), s.end(), k);
    if (mult == 0) return out;
    FockOracle::State t = s;
    t.erase(std::find(t.begin(), t.end(), k));
    add_to(out, t, Rational(k, order) * Rational(mult));
  }
  return out;
}

}  // namespace

FockOracle::FockOracle(int64_t order, Rational momentum) : order_(order), momentum_(std::move(momentum)) {
  if (order_ != 1 && order_ != 2) throw std::invalid_argument("FockOracle: order must be 1 or 2");
  if (order_ == 2 && !momentum_.is_zero()) throw std::invalid_argument("FockOracle: twisted sector has no momentum");
}

ScaledExponent FockOracle::degree(const State& s) const {
  int64_t total = 0;
  for (auto k : s) total += k;
  return ScaledExponent(total, order_);
}

FockOracle::Vec FockOracle::alpha(const ScaledExponent& m, const State& s) const {
  const ScaledExponent mt = m * order_;
  if (!mt.is_integer()) throw std::invalid_argument("FockOracle::alpha: mode " + m.str() + " not in (1/T)Z");
  const int64_t k = mt.numerator();
  if (order_ == 2 && k % 2 == 0) throw std::invalid_argument("FockOracle::alpha: twisted modes are half-odd");
  return alpha_numerator(k, order_, momentum_, s);
}

FockOracle::Vec FockOracle::alpha(const ScaledExponent& m, const Vec& w) const {
  Vec out;
  for (const auto& [s, c] : w) add_scaled(out, alpha(m, s), c);
  return out;
}

FockOracle::Vec algebra_alpha(int64_t j, const FockOracle::State& s) { return alpha_numerator(j, 1, Rational(0), s); }

FockOracle::Vec FockOracle::field_mode(const State& u, const ScaledExponent& Q, const Vec& w) {
  Vec out;
  for (const auto& [s, c] : w) add_scaled(out, field_mode(u, Q, s), c);
  return out;
}

FockOracle::Vec FockOracle::field_mode(const State& u, const ScaledExponent& Q, const State& w) {
  int64_t wt_u = 0;
  for (auto k : u) wt_u += k;
  if (degree(w) + ScaledExponent(wt_u) - Q - ScaledExponent(1) < ScaledExponent(0)) return {};
  auto key = std::make_tuple(u, Q, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Vec result = compute(u, Q, w);
  memo_.emplace(std::move(key), result);
  return result;
}

FockOracle::Vec FockOracle::compute(const State& u, const ScaledExponent& Q, const State& w) {
  Vec out;
  if (u.empty()) {
    if (Q == ScaledExponent(-1)) add_to(out, w, Rational(1));
    return out;
  }
  const int64_t k = u.front();
  const State b(u.begin() + 1, u.end());
  int64_t wt_b = 0;
  for (auto x : b) wt_b += x;
  const ScaledExponent deg_w = degree(w);
  const Rational sign_k = (k % 2 == 0) ? Rational(1) : Rational(-1);
  // Twisted modes of a are shifted by 1/2 relative to the integral Borcherds parameter.
  const ScaledExponent m = order_ == 1 ? ScaledExponent(0) : ScaledExponent(1, 2);
  const ScaledExponent q = Q - m;
  const State w_state = w;
  Vec ws;
  ws[w_state] = Rational(1);

  // sum_i (-1)^i C(-k, i) a_{m-k-i} b_{q+i} w
  for (int64_t i = 0; q + ScaledExponent(i) <= deg_w + ScaledExponent(wt_b - 1); ++i) {
    const Rational c = binomial_coefficient(Rational(-k), i) * ((i % 2 == 0) ? Rational(1) : Rational(-1));
    if (c.is_zero()) continue;
    const Vec inner = field_mode(b, q + ScaledExponent(i), w_state);
    if (inner.empty()) continue;
    add_scaled(out, alpha(m - ScaledExponent(k + i), inner), c);
  }
  // - sum_i (-1)^i C(-k, i) (-1)^k b_{q-k-i} a_{m+i} w
  for (int64_t i = 0; m + ScaledExponent(i) <= deg_w; ++i) {
    const Rational c = binomial_coefficient(Rational(-k), i) * ((i % 2 == 0) ? Rational(1) : Rational(-1)) * sign_k;
    if (c.is_zero()) continue;
    const Vec inner = alpha(m + ScaledExponent(i), ws);
    if (inner.empty()) continue;
    add_scaled(out, field_mode(b, q - ScaledExponent(k + i), inner), -c);
  }
  if (order_ == 2) {
    // - sum_{i>=1} C(1/2, i) (a_{-k+i} b)_{Q-i} w, with a_{-k+i} b computed inside the algebra.
    for (int64_t i = 1; i <= k + wt_b; ++i) {
      const Rational c = binomial_coefficient(Rational(1, 2), i);
      const Vec ab = algebra_alpha(-k + i, b);
      for (const auto& [s, x] : ab) add_scaled(out, field_mode(s, Q - ScaledExponent(i), w_state), -c * x);
    }
  }
  return out;
}

std::vector<FockOracle::State> FockOracle::states_of_degree(const ScaledExponent& d) const {
  const ScaledExponent dt = d * order_;
  std::vector<State> out;
  if (!dt.is_integer() || dt < ScaledExponent(0)) return out;
  const int64_t total = dt.numerator();
  State cur;
  std::function<void(int64_t, int64_t)> rec = [&](int64_t remaining, int64_t max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int64_t p = std::min(max_part, remaining); p >= 1; --p) {
      if (order_ == 2 && p % 2 == 0) continue;
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

int64_t partition_count(int64_t n) {
  if (n < 0) return 0;
  std::vector<int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int64_t part = 1; part <= n; ++part)
    for (int64_t t = part; t <= n; ++t) p[static_cast<std::size_t>(t)] += p[static_cast<std::size_t>(t - part)];
  return p[static_cast<std::size_t>(n)];
}

}  // namespace vtx
