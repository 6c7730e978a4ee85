#pragma once

#include "vtx/residue_identities/module_data.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vtx {

/// Weight-filtered truncation (V_{<=cap} + O)/O of a level-n or twisted Zhu
/// algebra, together with the structure constants of the induced product.
///
/// Only generators whose every component has weight <= cap are used, so the
/// span under-approximates O intersected with V_{<=cap}. The quotient basis
/// is the set of non-pivot columns of the echelon generator span; each
/// quotient basis vector is represented by one basis vector of V.
class ZhuQuotient {
 public:
  enum class Kind { Level, Twisted };

  ZhuQuotient(AlgebraPtr V, Kind kind, int64_t level, Automorphism twist, int64_t cap,
              std::vector<GradedVector> generators);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int64_t level() const { return level_; }
  [[nodiscard]] const Automorphism& twist() const { return twist_; }
  [[nodiscard]] int64_t weight_cap() const { return cap_; }
  [[nodiscard]] const TruncatedVertexAlgebra& algebra() const { return *V_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return V_; }
  [[nodiscard]] const std::vector<GradedVector>& generators() const { return generators_; }
  [[nodiscard]] const Quotient& quotient() const { return quotient_; }
  [[nodiscard]] std::size_t dim() const { return quotient_.dim(); }
  [[nodiscard]] std::size_t dim_at(int64_t weight) const { return quotient_.dim_at(ScaledExponent(weight)); }
  /// Basis index in V representing quotient basis vector i.
  [[nodiscard]] std::size_t representative(std::size_t i) const;
  [[nodiscard]] int64_t representative_weight(std::size_t i) const { return V_->weight(representative(i)); }

  /// Quotient coordinates of a vector of V; PrecisionError if it has weight above the cap.
  [[nodiscard]] GradedVector project(const GradedVector& v) const;
  /// Whether a vector of V supported under the cap lies in the generator span.
  [[nodiscard]] bool in_span(const GradedVector& v) const;
  [[nodiscard]] GradedVector unit() const { return project(V_->vacuum()); }

  /// Product u * v of basis vectors of V (mult_n or mult_g).
  [[nodiscard]] GradedVector product(std::size_t u, std::size_t v) const;
  /// Bilinear extension of product.
  [[nodiscard]] GradedVector product(const GradedVector& a, const GradedVector& b) const;
  /// Largest weight a component of u * v can have.
  [[nodiscard]] int64_t product_top_weight(int64_t wt_u, int64_t wt_v) const;

  /// (i, j) -> quotient coordinates of rep(i) * rep(j), for pairs whose product stays under the cap.
  [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, GradedVector>& mult_table() const {
    return table_;
  }
  /// Product of quotient vectors through the table; PrecisionError on a missing entry.
  [[nodiscard]] GradedVector multiply(const GradedVector& a, const GradedVector& b) const;

  /// Throws AxiomError with a certificate if a generator survives projection,
  /// the product is not well defined on in-cap generator perturbations, the
  /// unit fails, associativity fails on an in-table triple, or (twisted) a
  /// nonzero eigenspace vector survives projection.
  void check_invariants() const;

 private:
  [[nodiscard]] GradedVector to_truncated(const GradedVector& v) const;

  AlgebraPtr V_;
  Kind kind_;
  int64_t level_;
  Automorphism twist_;
  int64_t cap_;
  std::vector<GradedVector> generators_;
  SpacePtr truncated_;
  std::vector<std::size_t> to_trunc_, from_trunc_;
  Quotient quotient_;
  std::map<std::pair<std::size_t, std::size_t>, GradedVector> table_;
};

/// Sum_i C(wt u + n, i) u_{i-2n-2} v for basis pairs whose top component has weight <= cap.
std::vector<GradedVector> o_n_generators(const TruncatedVertexAlgebra& V, int64_t n, int64_t weight_cap);
/// (L(-1) + L(0))u for basis u with wt u + 1 <= cap. These lie in O_0 already
/// (they are the v = 1 residues) but must be added by hand for n >= 1.
/// Throws std::logic_error when V has no conformal vector.
std::vector<GradedVector> conformal_generators(const TruncatedVertexAlgebra& V, int64_t weight_cap);
/// Sum_i C(wt u - 1 + delta_r + r/T, i) u_{i-1-delta_r} v for u in V^r, within the cap.
std::vector<GradedVector> o_g_generators(const TruncatedVertexAlgebra& V, const Automorphism& g, int64_t weight_cap);

/// Sum_{m=0}^n (-1)^m C(m+n, n) Sum_i C(wt u + n, i) u_{i-n-m-1} v.
GradedVector mult_n(const TruncatedVertexAlgebra& V, int64_t n, std::size_t u, std::size_t v);
/// Sum_i C(wt u, i) u_{i-1} v for u in V^0, zero for u in V^r with r != 0.
GradedVector mult_g(const TruncatedVertexAlgebra& V, const Automorphism& g, std::size_t u, std::size_t v);

/// Whether Sum_i C(wt u + n + k, i) u_{i-m-2n-2} v lies in the generator span of Q (level n).
/// Requires m >= k >= 0; PrecisionError when the element reaches above the cap.
bool extended_membership_n(const ZhuQuotient& Q, std::size_t u, std::size_t v, int64_t m, int64_t k);
/// Whether Sum_i C(wt u - 1 + delta_r + r/T + k, i) u_{i-m-delta_r-1} v lies in the generator span of Q (twisted).
bool extended_membership_g(const ZhuQuotient& Q, std::size_t u, std::size_t v, int64_t m, int64_t k);

/// Builds and verifies the level-n quotient; weight_cap <= V.cutoff(). For
/// n >= 1 the span also contains conformal_generators when V has a conformal vector.
ZhuQuotient build_A_n(const AlgebraPtr& V, int64_t n, int64_t weight_cap);
/// Builds and verifies the twisted quotient.
ZhuQuotient build_A_g(const AlgebraPtr& V, const Automorphism& g, int64_t weight_cap);

/// Filtered dimensions at weights 0..cap.
std::vector<std::size_t> filtered_dims(const ZhuQuotient& Q);
/// Largest weight w such that lower and higher agree on every weight <= w, or -1.
int64_t stable_weight(const ZhuQuotient& lower, const ZhuQuotient& higher);

}  // namespace vtx
