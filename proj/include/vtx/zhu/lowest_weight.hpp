#pragma once

#include "vtx/zhu/zhu_algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace vtx {

/// Column j holds the image of basis vector j.
using LinearMap = std::vector<GradedVector>;

using ZhuPtr = std::shared_ptr<const ZhuQuotient>;

/// Finite-dimensional module over a Zhu quotient: one matrix per quotient basis vector.
class AModule {
 public:
  AModule(ZhuPtr quotient, std::vector<std::string> labels, std::vector<LinearMap> rho);

  [[nodiscard]] const ZhuQuotient& quotient() const { return *quotient_; }
  [[nodiscard]] const ZhuPtr& quotient_ptr() const { return quotient_; }
  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const LinearMap& rho(std::size_t i) const { return rho_.at(i); }

  /// rho(q) w for quotient coordinates q.
  [[nodiscard]] GradedVector act_class(const GradedVector& q, const GradedVector& w) const;
  /// rho(v + O) w for a vector v of the algebra.
  [[nodiscard]] GradedVector act(const GradedVector& v, const GradedVector& w) const;

  /// Throws AxiomError unless rho(unit) = id and rho(a) rho(b) = rho(a * b) on every table entry.
  void check_module() const;

 private:
  ZhuPtr quotient_;
  std::vector<std::string> labels_;
  std::vector<LinearMap> rho_;
};

/// Vectors w with u_j w = 0 whenever wt u - j - 1 < -n, computed per degree
/// as an intersection of kernels. For a twisted module use n = 0.
Subspace omega_n(const ModuleData& M, int64_t n);

struct OmegaAction {
  Subspace omega;
  /// Basis of omega in module coordinates; AModule basis j is basis[j].
  std::vector<GradedVector> basis;
  AModule module;
};

/// Restricts o(v) to omega_n(M) (n = Q.level(), or 0 for a twisted Q).
/// Throws AxiomError if a generator of Q acts nontrivially or o(v) leaves omega.
OmegaAction a_action_on_omega(const ModuleData& M, const ZhuPtr& Q);

/// Coordinates of v along the echelon basis of S; AxiomError if v is not in S.
GradedVector echelon_coordinates(const Subspace& S, const GradedVector& v);

}  // namespace vtx
