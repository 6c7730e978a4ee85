#include "vtx/zhu/lowest_weight.hpp"

#include "vtx/residue_identities/identities.hpp"

#include <stdexcept>

namespace vtx {

namespace {

GradedVector apply_map(const LinearMap& A, const GradedVector& w) {
  GradedVector out;
  for (const auto& [j, c] : w.entries()) out.add_scaled(A.at(j), c);
  return out;
}

}  // namespace

AModule::AModule(ZhuPtr quotient, std::vector<std::string> labels, std::vector<LinearMap> rho)
    : quotient_(std::move(quotient)), labels_(std::move(labels)), rho_(std::move(rho)) {
  if (rho_.size() != quotient_->dim()) throw std::invalid_argument("AModule: one matrix per quotient basis vector");
  for (const auto& A : rho_) {
    if (A.size() != dim()) throw std::invalid_argument("AModule: matrix size does not match the module");
    for (const auto& col : A)
      for (const auto& [i, c] : col.entries())
        if (i >= dim()) throw std::invalid_argument("AModule: matrix entry out of range");
  }
}

GradedVector AModule::act_class(const GradedVector& q, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [i, c] : q.entries()) out.add_scaled(apply_map(rho_.at(i), w), c);
  return out;
}

GradedVector AModule::act(const GradedVector& v, const GradedVector& w) const {
  return act_class(quotient_->project(v), w);
}

void AModule::check_module() const {
  const GradedVector one = quotient_->unit();
  for (std::size_t j = 0; j < dim(); ++j) {
    const GradedVector e = GradedVector::basis(j);
    if (act_class(one, e) != e) throw AxiomError("AModule: the unit does not act as the identity on " + labels_[j]);
  }
  for (const auto& [ab, prod] : quotient_->mult_table()) {
    const auto [a, b] = ab;
    for (std::size_t j = 0; j < dim(); ++j) {
      const GradedVector e = GradedVector::basis(j);
      if (apply_map(rho_[a], apply_map(rho_[b], e)) != act_class(prod, e))
        throw AxiomError("AModule: rho(a) rho(b) != rho(a * b) for classes " + std::to_string(a) + ", " +
                         std::to_string(b) + " on " + labels_[j]);
    }
  }
}

Subspace omega_n(const ModuleData& M, int64_t n) {
  const TruncatedVertexAlgebra& V = M.algebra();
  const GradedSpace& W = M.space();
  Subspace out(M.space_ptr());
  for (const auto& [d, idx] : W.components()) {
    // Stack every mode that lowers degree by more than n into one map W_d -> sum of W.
    std::vector<GradedVector> images(idx.size());
    std::size_t block = 0;
    for (std::size_t u = 0; u < V.dim(); ++u) {
      const ScaledExponent hi = ScaledExponent(V.weight(u) - 1) + d;  // result degree 0
      const ScaledExponent lo = M.lattice_ceil(u, ScaledExponent(V.weight(u) + n - 1) + ScaledExponent(1, M.twist().order));
      for (ScaledExponent j = lo; j <= hi; j += ScaledExponent(1)) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
          const GradedVector img = M.act(u, j, idx[k]);
          for (const auto& [i, c] : img.entries()) images[k].add(block * W.dim() + i, c);
        }
        ++block;
      }
    }
    for (const auto& row : kernel_of(M.space_ptr(), idx, images, block * W.dim()).basis()) out.insert(row);
  }
  return out;
}

GradedVector echelon_coordinates(const Subspace& S, const GradedVector& v) {
  const GradedSpace& A = *S.ambient();
  const auto rows = S.basis();
  GradedVector coords, rebuilt;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t pivot = rows[r].entries().begin()->first;
    for (const auto& [i, c] : rows[r].entries())
      if (A.degree(i) > A.degree(pivot)) pivot = i;
    const Rational c = v.at(pivot);
    coords.add(r, c);
    rebuilt.add_scaled(rows[r], c);
  }
  if (rebuilt != v) throw AxiomError("vector " + v.str(A) + " is not in the subspace");
  return coords;
}

OmegaAction a_action_on_omega(const ModuleData& M, const ZhuPtr& Q) {
  const int64_t n = Q->kind() == ZhuQuotient::Kind::Level ? Q->level() : 0;
  Subspace omega = omega_n(M, n);
  std::vector<GradedVector> basis = omega.basis();
  for (const auto& g : Q->generators())
    for (const auto& b : basis)
      if (!o_action(M, g, b).is_zero())
        throw AxiomError("o(" + g.str(Q->algebra().space()) + ") does not annihilate " + b.str(M.space()));
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.str(M.space()));
  std::vector<LinearMap> rho;
  for (std::size_t i = 0; i < Q->dim(); ++i) {
    LinearMap A;
    const GradedVector rep = GradedVector::basis(Q->representative(i));
    for (const auto& b : basis) A.push_back(echelon_coordinates(omega, o_action(M, rep, b)));
    rho.push_back(std::move(A));
  }
  AModule module(Q, std::move(labels), std::move(rho));
  module.check_module();
  return {std::move(omega), std::move(basis), std::move(module)};
}

}  // namespace vtx
