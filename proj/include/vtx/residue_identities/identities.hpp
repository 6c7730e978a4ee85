#pragma once

#include "vtx/residue_identities/module_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtx {

/// Smallest bound from grading alone: the least lattice point n of v with
/// deg w + wt v - n - 1 < 0.
ScaledExponent grading_bound(const ModuleData& M, std::size_t v, std::size_t w);

/// Least k on the mode lattice of v with v_n w = 0 for all n >= k. For a
/// zero module returns kNoBound. Throws PrecisionError if every certified
/// mode vanishes but uncertified ones could still be nonzero.
inline const ScaledExponent kNoBound{-(int64_t{1} << 40)};
ScaledExponent truncation_bound(const ModuleData& M, std::size_t v, const GradedVector& w);
ScaledExponent truncation_bound(const ModuleData& M, std::size_t v, std::size_t w);

/// Res_x0 Res_x2 (x0+x2)^p x2^q Y(u, x0+x2) Y(v, x2) w, expanded in
/// nonnegative powers of x2.
GradedVector lhs_product(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w, const ScaledExponent& p,
                         const ScaledExponent& q);

/// Res_x0 Res_x2 f(x0, x2) x2^q (x2+x0)^l Y(Y(u, x0)v, x2) w with
/// f = sum_{i<k-q} C(p-l, i) x0^{p-l-i} x2^i, evaluated in component form.
GradedVector rhs_iterate(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w, const ScaledExponent& p,
                         const ScaledExponent& q, const ScaledExponent& k, const ScaledExponent& l);

/// Res_x0 Res_x2 x0^{p-l-i} x2^{q+i} (x2+x0)^l Y(Y(u, x0)v, x2) w.
GradedVector truncation_residue(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                                const ScaledExponent& p, const ScaledExponent& q, int64_t i, const ScaledExponent& l);
bool check_truncation_identity(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                               const ScaledExponent& p, const ScaledExponent& q, int64_t i, const ScaledExponent& l);

/// u_p v_q w computed from iterates only (finite double residue).
GradedVector product_to_iterates(const ModuleData& M, std::size_t u, const ScaledExponent& p, std::size_t v,
                                 const ScaledExponent& q, std::size_t w, const ScaledExponent& k,
                                 const ScaledExponent& l);

/// sum_{j>=0} C(l, j) (u_{j+m} v)_{N-j-m-2} w.
GradedVector component_iterate_sum(const ModuleData& M, std::size_t u, std::size_t v, const GradedVector& w,
                                   const ScaledExponent& l, int64_t m, const ScaledExponent& N);

/// o(a) w = a_{wt a - 1} w summed over the homogeneous components of a.
GradedVector o_action(const ModuleData& M, const GradedVector& a, const GradedVector& w);

/// sum_j C(e, j) u_{j+m} v inside V, for a rational exponent e.
GradedVector binomial_iterate(const TruncatedVertexAlgebra& V, const ScaledExponent& e, std::size_t u, int64_t m,
                              std::size_t v);

/// o(sum_j C(wt u + n, j) u_{j+m} v) w == 0 for w of degree n, m <= -2n-2.
bool corollary_annihilation_n(const ModuleData& M, std::size_t u, std::size_t v, const GradedVector& w, int64_t n,
                              int64_t m);
/// o(sum_j C(wt u - 1 + delta_r + r/T, j) u_{j+m} v) w == 0 for w of degree 0, m <= -delta_r - 1.
bool corollary_annihilation_g(const ModuleData& M, std::size_t u, std::size_t v, const GradedVector& w, int64_t m);

enum class CheckTag { Pass, Fail, Vacuous, Uncertified };
const char* tag_name(CheckTag t);

/// One compared coefficient of x0^{-1-s} x2^{-1-t}.
struct CoefficientCheck {
  int64_t s = 0;
  ScaledExponent t;
  CheckTag tag = CheckTag::Pass;
  GradedVector lhs, rhs;
};

struct AssocWindow {
  int64_t s_min = 0, s_max = 0;
};

/// Window of s values: from the lowest s whose iterates all stay under the
/// algebra cutoff to the largest s where the iterate side can be nonzero,
/// extended by the module cutoff.
AssocWindow default_window(const ModuleData& M, std::size_t u, std::size_t v);

struct AssocResult {
  bool pass = true;
  std::size_t checked = 0, vacuous = 0, uncertified = 0;
  std::optional<CoefficientCheck> first_failure;
};

/// Compares the coefficients of x0^{-1-s} x2^{-1-t} in
/// (x0+x2)^l Y(u, x0+x2) Y(v, x2) w and (x2+x0)^l Y(Y(u, x0)v, x2) w for s in
/// the window and every t whose coefficient lands in degrees 0..cutoff.
AssocResult check_weak_associativity(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                                     const ScaledExponent& l, const AssocWindow& window);

/// Component of the Jacobi identity for u in V^r, m in r/T + Z, n on the
/// lattice of v and integer p:
///   sum_i C(m, i) (u_{p+i} v)_{m+n-i} w
///     = sum_i (-1)^i C(p, i) (u_{m+p-i} v_{n+i} w - (-1)^p v_{n+p-i} u_{m+i} w).
/// Uncertified when a term leaves the algebra or module window.
struct JacobiCheck {
  CheckTag tag = CheckTag::Pass;
  GradedVector lhs, rhs;
};
JacobiCheck check_jacobi_component(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w,
                                   const ScaledExponent& m, const ScaledExponent& n, int64_t p);

/// Summary of a residue-formula sweep over one triple.
struct ResidueSweep {
  std::size_t product_checks = 0, truncation_checks = 0, vacuous = 0, uncertified = 0;
  bool pass = true;
  std::string witness;
};

/// For every in-window (p, q): lhs_product == rhs_iterate, and for every
/// i >= k-q the truncation identity, with k, l the grading bounds.
ResidueSweep sweep_residue_formulas(const ModuleData& M, std::size_t u, std::size_t v, std::size_t w);

}  // namespace vtx
