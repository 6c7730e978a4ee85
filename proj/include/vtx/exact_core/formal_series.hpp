#pragma once

#include "vtx/exact_core/errors.hpp"
#include "vtx/exact_core/rational.hpp"
#include "vtx/exact_core/scaled_exponent.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace vtx {

inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
inline Rational coeff_scale(const Rational& s, const Rational& c) { return s * c; }
inline std::string coeff_str(const Rational& c) { return c.str(); }

/// Exactness certificate for one variable.
///
/// `floor` is a lower bound for the support of the true (untruncated) series
/// in this variable; `exact_to` is the largest exponent up to which every
/// coefficient is known. std::nullopt means -infinity for `floor` and
/// +infinity for `exact_to`.
struct VarWindow {
  std::optional<ScaledExponent> floor;
  std::optional<ScaledExponent> exact_to;

  [[nodiscard]] bool contains(const ScaledExponent& e) const {
    return (!floor || *floor <= e) && (!exact_to || e <= *exact_to);
  }
  friend bool operator==(const VarWindow&, const VarWindow&) = default;
};

using Exponents = std::vector<ScaledExponent>;

/// Multivariate truncated formal Laurent series with exponents in (1/T)Z.
///
/// Coefficients are either Rational or any type C providing coeff_is_zero(C),
/// coeff_scale(Rational, C), operator+ and operator- (found by ADL).
template <class C>
class FormalSeries {
 public:
  FormalSeries() = default;
  explicit FormalSeries(std::vector<std::string> vars)
      : vars_(std::move(vars)), window_(vars_.size()) {}

  static FormalSeries monomial(std::vector<std::string> vars, Exponents exps, C coeff) {
    FormalSeries s(std::move(vars));
    s.add_term(std::move(exps), std::move(coeff));
    return s;
  }

  [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
  [[nodiscard]] const std::map<Exponents, C>& terms() const { return terms_; }
  [[nodiscard]] const std::vector<VarWindow>& window() const { return window_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t var_index(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw std::invalid_argument("FormalSeries: unknown variable " + v);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void set_window(std::size_t var, VarWindow w) {
    window_.at(var) = std::move(w);
    prune();
  }

  /// Adds `coeff` to the coefficient at `exps`; zero results are erased.
  void add_term(Exponents exps, const C& coeff) {
    if (exps.size() != vars_.size()) throw std::invalid_argument("FormalSeries: exponent arity");
    if (coeff_is_zero(coeff)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exps), coeff);
    } else {
      it->second = it->second + coeff;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Coefficient at `exps`; throws PrecisionError outside the window.
  [[nodiscard]] C coefficient(const Exponents& exps) const {
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const auto& w = window_[v];
      if (w.exact_to && *w.exact_to < exps[v])
        throw PrecisionError("FormalSeries: exponent " + exps[v].str() + " of " + vars_[v] +
                             " is beyond the exact window");
    }
    auto it = terms_.find(exps);
    return it == terms_.end() ? C{} : it->second;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(c) << ")";
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (e[v] != ScaledExponent(0)) os << "*" << vars_[v] << "^" << e[v].str();
    }
    return os.str();
  }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      bool keep = true;
      for (std::size_t v = 0; v < vars_.size() && keep; ++v) keep = window_[v].contains(it->first[v]);
      it = keep ? std::next(it) : terms_.erase(it);
    }
  }

  template <class D>
  friend FormalSeries<D> series_add(const FormalSeries<D>&, const FormalSeries<D>&);
  template <class D>
  friend FormalSeries<D> series_mul(const FormalSeries<Rational>&, const FormalSeries<D>&);
  template <class D>
  friend FormalSeries<D> residue(const FormalSeries<D>&, const std::string&);

  std::vector<std::string> vars_;
  std::map<Exponents, C> terms_;
  std::vector<VarWindow> window_;
};

namespace detail {
inline std::optional<ScaledExponent> min_floor(const std::optional<ScaledExponent>& a,
                                               const std::optional<ScaledExponent>& b) {
  if (!a || !b) return std::nullopt;
  return std::min(*a, *b);
}
inline std::optional<ScaledExponent> min_exact(const std::optional<ScaledExponent>& a,
                                               const std::optional<ScaledExponent>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}
}  // namespace detail

/// Termwise sum; the window is the intersection of the two windows.
template <class C>
FormalSeries<C> series_add(const FormalSeries<C>& a, const FormalSeries<C>& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("series_add: mismatched variables");
  FormalSeries<C> out(a.vars_);
  for (std::size_t v = 0; v < a.vars_.size(); ++v)
    out.window_[v] = {detail::min_floor(a.window_[v].floor, b.window_[v].floor),
                      detail::min_exact(a.window_[v].exact_to, b.window_[v].exact_to)};
  for (const auto& [e, c] : a.terms_) out.add_term(e, c);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  out.prune();
  return out;
}

template <class C>
FormalSeries<C> series_neg(const FormalSeries<C>& a) {
  FormalSeries<C> out(a.variables());
  for (std::size_t v = 0; v < a.variables().size(); ++v) out.set_window(v, a.window()[v]);
  for (const auto& [e, c] : a.terms()) out.add_term(e, coeff_scale(Rational(-1), c));
  return out;
}

/// Cauchy product of a scalar series with a C-valued series.
///
/// Per variable, the result is exact up to
/// min(a.exact_to + b.floor, b.exact_to + a.floor), where an infinite exact_to
/// imposes no constraint. Throws PrecisionError if that window is empty.
template <class C>
FormalSeries<C> series_mul(const FormalSeries<Rational>& a, const FormalSeries<C>& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("series_mul: mismatched variables");
  const std::size_t nv = a.vars_.size();
  FormalSeries<C> out(a.vars_);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& wa = a.window_[v];
    const auto& wb = b.window_[v];
    std::optional<ScaledExponent> floor;
    if (wa.floor && wb.floor) floor = *wa.floor + *wb.floor;
    std::optional<ScaledExponent> exact;
    bool empty = false;
    auto constrain = [&](const std::optional<ScaledExponent>& hi, const std::optional<ScaledExponent>& lo) {
      if (!hi) return;
      if (!lo) { empty = true; return; }
      exact = detail::min_exact(exact, *hi + *lo);
    };
    constrain(wa.exact_to, wb.floor);
    constrain(wb.exact_to, wa.floor);
    if (empty || (floor && exact && *exact < *floor))
      throw PrecisionError("series_mul: empty result window in variable " + a.vars_[v]);
    out.window_[v] = {floor, exact};
  }
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(nv);
      bool inside = true;
      for (std::size_t v = 0; v < nv; ++v) {
        e[v] = ea[v] + eb[v];
        inside = inside && out.window_[v].contains(e[v]);
      }
      if (inside) out.add_term(std::move(e), coeff_scale(ca, cb));
    }
  return out;
}

/// Coefficient of var^{-1}, as a series in the remaining variables.
template <class C>
FormalSeries<C> residue(const FormalSeries<C>& s, const std::string& var) {
  const std::size_t idx = s.var_index(var);
  const auto& w = s.window_[idx];
  if (w.exact_to && *w.exact_to < ScaledExponent(-1))
    throw PrecisionError("residue: window does not certify the " + var + "^-1 coefficient");
  std::vector<std::string> rest;
  for (std::size_t v = 0; v < s.vars_.size(); ++v)
    if (v != idx) rest.push_back(s.vars_[v]);
  FormalSeries<C> out(rest);
  for (std::size_t v = 0, j = 0; v < s.vars_.size(); ++v)
    if (v != idx) out.window_[j++] = s.window_[v];
  for (const auto& [e, c] : s.terms_) {
    if (e[idx] != ScaledExponent(-1)) continue;
    Exponents r;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != idx) r.push_back(e[v]);
    out.add_term(std::move(r), c);
  }
  return out;
}

/// Formal partial derivative in `var`.
template <class C>
FormalSeries<C> derivative(const FormalSeries<C>& s, const std::string& var) {
  const std::size_t idx = s.var_index(var);
  FormalSeries<C> out(s.variables());
  for (std::size_t v = 0; v < s.variables().size(); ++v) {
    VarWindow w = s.window()[v];
    if (v == idx) {
      if (w.floor) w.floor = *w.floor - ScaledExponent(1);
      if (w.exact_to) w.exact_to = *w.exact_to - ScaledExponent(1);
    }
    out.set_window(v, w);
  }
  for (const auto& [e, c] : s.terms()) {
    Exponents d = e;
    d[idx] = d[idx] - ScaledExponent(1);
    out.add_term(std::move(d), coeff_scale(e[idx].to_rational(), c));
  }
  return out;
}

}  // namespace vtx
