#include "vtx/residue_identities/identities.hpp"

#include "vtx/exact_core/binomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vtx {

namespace {

int64_t wt(const ModuleData& M, std::size_t u) { return M.algebra().weight(u); }

// y_t w for an algebra vector y whose components may sit in different lattices.
GradedVector act_vec(const ModuleData& M, const GradedVector& y, const ScaledExponent& t, const GradedVector& w) {
  if (y.is_zero() || w.is_zero()) return {};
  return M.act(y, t, w);
}

std::string triple_label(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w) {
  const auto& s = M.algebra().space();
  return "u=" + s.label(u) + " v=" + s.label(v) + " w=" + M.space().label(w);
}

}  // namespace

ScaledExponent grading_bound(const ModuleData& M, std::size_t v, std::size_t w) {
  const ScaledExponent edge = M.degree(w) + ScaledExponent(wt(M, v) - 1);
  ScaledExponent c = M.lattice_ceil(v, edge);
  if (c == edge) c += ScaledExponent(1);
  return c;
}

ScaledExponent truncation_bound(const ModuleData& M, std::size_t v, const GradedVector& w) {
  if (w.is_zero()) return kNoBound;
  std::optional<ScaledExponent> top;
  for (const auto& [i, c] : w.entries()) {
    const ScaledExponent b = grading_bound(M, v, i);
    if (!top || *top < b) top = b;
  }
  for (ScaledExponent n = *top - ScaledExponent(1);; n -= ScaledExponent(1)) {
    bool all_certified = true;
    for (const auto& [i, c] : w.entries()) all_certified = all_certified && M.result_degree(v, n, i) <= M.cutoff();
    if (!all_certified)
      throw PrecisionError("truncation_bound: modes of " + M.algebra().space().label(v) +
                           " below the certified range are needed");
    if (!M.act(v, n, w).is_zero()) return n + ScaledExponent(1);
  }
}

ScaledExponent truncation_bound(const ModuleData& M, std::size_t v, std::size_t w) {
  return truncation_bound(M, v, GradedVector::basis(w));
}

GradedVector lhs_product(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w, const ScaledExponent& p,
                         const ScaledExponent& q) {
  const GradedVector bw = GradedVector::basis(w);
  const ScaledExponent k = grading_bound(M, v, w);
  GradedVector out;
  // Terms u_n v_{q+j} w with n = p - j; the x0-residue of (x0+x2)^{p-n-1} picks C(p-n-1, p-n).
  for (int64_t j = 0; q + ScaledExponent(j) < k; ++j) {
    const ScaledExponent n = p - ScaledExponent(j);
    const Rational c = binomial_coefficient(n.to_rational() * Rational(-1) + p.to_rational() - Rational(1), j);
    if (c.is_zero()) continue;
    const GradedVector inner = M.act(v, q + ScaledExponent(j), bw);
    out.add_scaled(M.act(u, n, inner), c);
  }
  return out;
}

GradedVector truncation_residue(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                                const ScaledExponent& p, const ScaledExponent& q, int64_t i, const ScaledExponent& l) {
  const ScaledExponent pl = p - l;
  if (!pl.is_integer()) throw std::domain_error("truncation_residue: p - l must be an integer");
  const int64_t m = pl.as_integer() - i;
  return component_iterate_sum(M, u, v, GradedVector::basis(w), l, m, p + q + ScaledExponent(2));
}

bool check_truncation_identity(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                               const ScaledExponent& p, const ScaledExponent& q, int64_t i, const ScaledExponent& l) {
  return truncation_residue(M, u, v, w, p, q, i, l).is_zero();
}

GradedVector rhs_iterate(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w, const ScaledExponent& p,
                         const ScaledExponent& q, const ScaledExponent& k, const ScaledExponent& l) {
  const ScaledExponent pl = p - l, kq = k - q;
  if (!pl.is_integer() || !kq.is_integer()) throw std::domain_error("rhs_iterate: p-l and k-q must be integers");
  GradedVector out;
  for (int64_t i = 0; i < kq.numerator(); ++i) {
    const Rational c = binomial_coefficient(pl, i);
    if (c.is_zero()) continue;
    out.add_scaled(truncation_residue(M, u, v, w, p, q, i, l), c);
  }
  return out;
}

GradedVector product_to_iterates(const ModuleData& M, std::size_t u, const ScaledExponent& p, std::size_t v,
                                 const ScaledExponent& q, std::size_t w, const ScaledExponent& k,
                                 const ScaledExponent& l) {
  return rhs_iterate(M, u, v, w, p, q, k, l);
}

GradedVector component_iterate_sum(const ModuleData& M, std::size_t u, std::size_t v, const GradedVector& w,
                                   const ScaledExponent& l, int64_t m, const ScaledExponent& N) {
  const TruncatedVertexAlgebra& V = M.algebra();
  GradedVector out;
  if (w.is_zero()) return out;
  for (int64_t j = 0; j + m < V.weight(u) + V.weight(v); ++j) {
    const Rational c = binomial_coefficient(l, j);
    if (c.is_zero()) continue;
    const GradedVector y = V.mode(u, j + m, v);
    out.add_scaled(act_vec(M, y, N - ScaledExponent(j + m + 2), w), c);
  }
  return out;
}

GradedVector o_action(const ModuleData& M, const GradedVector& a, const GradedVector& w) {
  GradedVector out;
  for (const auto& [i, c] : a.entries()) out.add_scaled(M.act(i, ScaledExponent(wt(M, i) - 1), w), c);
  return out;
}

GradedVector binomial_iterate(const TruncatedVertexAlgebra& V, const ScaledExponent& e, std::size_t u, int64_t m,
                              std::size_t v) {
  GradedVector out;
  for (int64_t j = 0; j + m < V.weight(u) + V.weight(v); ++j) {
    const Rational c = binomial_coefficient(e, j);
    if (c.is_zero()) continue;
    out.add_scaled(V.mode(u, j + m, v), c);
  }
  return out;
}

bool corollary_annihilation_n(const ModuleData& M, std::size_t u, std::size_t v, const GradedVector& w, int64_t n,
                              int64_t m) {
  if (m > -2 * n - 2) throw std::invalid_argument("corollary_annihilation_n: requires m <= -2n-2");
  for (const auto& [i, c] : w.entries())
    if (M.degree(i) != ScaledExponent(n)) throw std::invalid_argument("corollary_annihilation_n: w not of degree n");
  const GradedVector x = binomial_iterate(M.algebra(), ScaledExponent(wt(M, u) + n), u, m, v);
  return o_action(M, x, w).is_zero();
}

bool corollary_annihilation_g(const ModuleData& M, std::size_t u, std::size_t v, const GradedVector& w, int64_t m) {
  const Automorphism& g = M.twist();
  const int64_t delta = g.delta(u);
  if (m > -delta - 1) throw std::invalid_argument("corollary_annihilation_g: requires m <= -delta_r - 1");
  for (const auto& [i, c] : w.entries())
    if (M.degree(i) != ScaledExponent(0)) throw std::invalid_argument("corollary_annihilation_g: w not of degree 0");
  const ScaledExponent e = ScaledExponent(wt(M, u) - 1 + delta) + g.shift(u);
  const GradedVector x = binomial_iterate(M.algebra(), e, u, m, v);
  return o_action(M, x, w).is_zero();
}

const char* tag_name(CheckTag t) {
  switch (t) {
    case CheckTag::Pass: return "pass";
    case CheckTag::Fail: return "fail";
    case CheckTag::Vacuous: return "vacuous";
    case CheckTag::Uncertified: return "uncertified";
  }
  return "?";
}

AssocWindow default_window(const ModuleData& M, std::size_t u, std::size_t v) {
  const int64_t top = wt(M, u) + wt(M, v) - 1;
  return {top - M.algebra().cutoff(), top + M.cutoff().ceil() + 1};
}

AssocResult check_weak_associativity(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                                     const ScaledExponent& l, const AssocWindow& window) {
  const TruncatedVertexAlgebra& V = M.algebra();
  const GradedVector bw = GradedVector::basis(w);
  const ScaledExponent k = grading_bound(M, v, w);
  const ScaledExponent step(1, M.space().grading_scale());
  const ScaledExponent base = M.degree(w) + ScaledExponent(wt(M, u) + wt(M, v) - 2) - l;
  AssocResult res;
  for (int64_t s = window.s_min; s <= window.s_max; ++s)
    for (ScaledExponent F(0); F <= M.cutoff(); F += step) {
      // Coefficient of x0^{-1-s} x2^{-1-t}; its value has degree F.
      const ScaledExponent t = base - ScaledExponent(s) - F;
      if (!M.in_lattice(v, t)) continue;
      CoefficientCheck cc;
      cc.s = s;
      cc.t = t;
      bool any_term = false;
      try {
        for (int64_t j = 0; t + ScaledExponent(j) < k; ++j) {
          const Rational c = binomial_coefficient(Rational(j - s - 1), j);
          if (c.is_zero()) continue;
          any_term = true;
          const ScaledExponent n = l + ScaledExponent(s - j);
          cc.lhs.add_scaled(M.act(u, n, M.act(v, t + ScaledExponent(j), bw)), c);
        }
        for (int64_t i = 0; i + s < wt(M, u) + wt(M, v); ++i) {
          const Rational c = binomial_coefficient(l, i);
          if (c.is_zero()) continue;
          any_term = true;
          const GradedVector y = V.mode(u, i + s, v);
          cc.rhs.add_scaled(act_vec(M, y, l - ScaledExponent(i) + t, bw), c);
        }
      } catch (const PrecisionError&) {
        ++res.uncertified;
        continue;
      }
      if (!any_term) {
        ++res.vacuous;
        continue;
      }
      ++res.checked;
      if (cc.lhs != cc.rhs) {
        cc.tag = CheckTag::Fail;
        res.pass = false;
        if (!res.first_failure) res.first_failure = cc;
      }
    }
  return res;
}

JacobiCheck check_jacobi_component(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                                   const ScaledExponent& m, const ScaledExponent& n, int64_t p) {
  JacobiCheck out;
  if (!M.in_lattice(u, m) || !M.in_lattice(v, n)) {
    out.tag = CheckTag::Vacuous;
    return out;
  }
  const TruncatedVertexAlgebra& V = M.algebra();
  const GradedVector bw = GradedVector::basis(w);
  try {
    for (int64_t i = 0; p + i < wt(M, u) + wt(M, v); ++i) {
      const Rational c = binomial_coefficient(m, i);
      if (c.is_zero()) continue;
      out.lhs.add_scaled(act_vec(M, V.mode(u, p + i, v), m + n - ScaledExponent(i), bw), c);
    }
    const ScaledExponent ku = grading_bound(M, u, w), kv = grading_bound(M, v, w);
    int64_t imax = std::max((kv - n).as_integer(), (ku - m).as_integer()) - 1;
    if (p >= 0) imax = std::min(imax, p);
    const Rational sign_p = p % 2 == 0 ? Rational(1) : Rational(-1);
    for (int64_t i = 0; i <= imax; ++i) {
      Rational c = binomial_coefficient(Rational(p), i);
      if (c.is_zero()) continue;
      if (i % 2 != 0) c = -c;
      const ScaledExponent I(i);
      out.rhs.add_scaled(M.act(u, m + ScaledExponent(p) - I, M.act(v, n + I, bw)), c);
      out.rhs.add_scaled(M.act(v, n + ScaledExponent(p) - I, M.act(u, m + I, bw)), -(c * sign_p));
    }
  } catch (const PrecisionError&) {
    out.tag = CheckTag::Uncertified;
    return out;
  }
  out.tag = out.lhs == out.rhs ? CheckTag::Pass : CheckTag::Fail;
  return out;
}

ResidueSweep sweep_residue_formulas(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w) {
  ResidueSweep out;
  const ScaledExponent k = grading_bound(M, v, w);
  const ScaledExponent l = grading_bound(M, u, w);
  const ScaledExponent step(1, M.space().grading_scale());
  auto fail = [&](const std::string& what, const ScaledExponent& p, const ScaledExponent& q, int64_t i,
                  const GradedVector& a, const GradedVector& b) {
    out.pass = false;
    if (!out.witness.empty()) return;
    std::ostringstream os;
    os << what << " " << triple_label(M, u, v, w) << " p=" << p.str() << " q=" << q.str();
    if (i >= 0) os << " i=" << i;
    os << " lhs=" << a.str(M.space()) << " rhs=" << b.str(M.space());
    out.witness = os.str();
  };
  ++out.vacuous;  // q >= k: both sides vanish by truncation.
  for (ScaledExponent q = k - ScaledExponent(1); M.result_degree(v, q, w) <= M.cutoff(); q -= ScaledExponent(1)) {
    const ScaledExponent mid = M.result_degree(v, q, w);
    for (ScaledExponent F(0); F <= M.cutoff(); F += step) {
      const ScaledExponent p = mid + ScaledExponent(wt(M, u) - 1) - F;
      if (!M.in_lattice(u, p)) continue;
      try {
        const GradedVector a = lhs_product(M, u, v, w, p, q);
        const GradedVector b = rhs_iterate(M, u, v, w, p, q, k, l);
        ++out.product_checks;
        if (a != b) fail("product formula", p, q, -1, a, b);
      } catch (const PrecisionError&) {
        ++out.uncertified;
      }
      const int64_t first = (k - q).as_integer();
      for (int64_t i = first;; ++i) {
        try {
          const GradedVector r = truncation_residue(M, u, v, w, p, q, i, l);
          ++out.truncation_checks;
          if (!r.is_zero()) fail("truncation identity", p, q, i, r, GradedVector{});
        } catch (const PrecisionError&) {
          ++out.uncertified;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace vtx
