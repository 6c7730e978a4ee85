#include "vtx/vertex_data/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace vtx {

namespace {

std::string triple_str(const GradedSpace& s, std::size_t u, int64_t n, std::size_t v) {
  std::ostringstream os;
  os << "(" << s.label(u) << ")_" << n << "(" << s.label(v) << ")";
  return os.str();
}

}  // namespace

TruncatedVertexAlgebra::TruncatedVertexAlgebra(SpacePtr space, int64_t cutoff, GradedVector vacuum,
                                               std::optional<GradedVector> conformal)
    : space_(std::move(space)), cutoff_(cutoff), vacuum_(std::move(vacuum)), conformal_(std::move(conformal)) {
  if (cutoff_ < 0) throw std::invalid_argument("TruncatedVertexAlgebra: negative cutoff");
  for (const auto& [d, idx] : space_->components()) {
    if (!d.is_integer() || d < ScaledExponent(0) || d > ScaledExponent(cutoff_))
      throw AxiomError("TruncatedVertexAlgebra: weight " + d.str() + " outside 0.." + std::to_string(cutoff_));
  }
  if (vacuum_.is_zero()) throw AxiomError("vacuum is zero");
  for (const auto& [i, c] : vacuum_.entries())
    if (weight(i) != 0) throw AxiomError("vacuum is not of weight 0");
  if (conformal_)
    for (const auto& [i, c] : conformal_->entries())
      if (weight(i) != 2) throw AxiomError("conformal vector is not of weight 2");
}

void TruncatedVertexAlgebra::set_mode(std::size_t u, int64_t n, std::size_t v, GradedVector value) {
  const int64_t w = weight(u) + weight(v) - n - 1;
  if (w < 0) {
    if (!value.is_zero()) throw AxiomError("lower truncation violated at " + triple_str(*space_, u, n, v));
    return;
  }
  if (w > cutoff_) throw AxiomError("mode entry above the cutoff at " + triple_str(*space_, u, n, v));
  for (const auto& [i, c] : value.entries())
    if (weight(i) != w)
      throw AxiomError("grading violated at " + triple_str(*space_, u, n, v) + ": component " + space_->label(i));
  if (value.is_zero()) modes_.erase({u, n, v});
  else modes_[{u, n, v}] = std::move(value);
}

void TruncatedVertexAlgebra::perturb(std::size_t u, int64_t n, std::size_t v, std::size_t component,
                                     const Rational& delta) {
  if (source_) (void)mode(u, n, v);
  GradedVector& e = modes_[{u, n, v}];
  e.add(component, delta);
  if (e.is_zero()) modes_.erase({u, n, v});
}

bool TruncatedVertexAlgebra::is_overflow(std::size_t u, int64_t n, std::size_t v) const {
  return weight(u) + weight(v) - n - 1 > cutoff_;
}

GradedVector TruncatedVertexAlgebra::mode(std::size_t u, int64_t n, std::size_t v) const {
  const int64_t w = weight(u) + weight(v) - n - 1;
  if (w < 0) return {};
  if (w > cutoff_)
    throw PrecisionError("algebra overflow: " + triple_str(*space_, u, n, v) + " has weight " + std::to_string(w) +
                         " above cutoff " + std::to_string(cutoff_));
  const ModeKey key{u, n, v};
  auto it = modes_.find(key);
  if (it != modes_.end()) return it->second;
  if (!source_ || known_zero_.count(key)) return {};
  GradedVector value = source_(u, n, v);
  for (const auto& [i, c] : value.entries())
    if (weight(i) != w) throw AxiomError("mode source violates the grading at " + triple_str(*space_, u, n, v));
  if (value.is_zero()) {
    known_zero_.insert(key);
    return {};
  }
  return modes_.emplace(key, std::move(value)).first->second;
}

void TruncatedVertexAlgebra::materialize() const {
  if (!source_) return;
  for (std::size_t u = 0; u < dim(); ++u)
    for (std::size_t v = 0; v < dim(); ++v) {
      const int64_t s = weight(u) + weight(v);
      for (int64_t n = s - 1 - cutoff_; n <= s - 1; ++n) (void)mode(u, n, v);
    }
}

GradedVector TruncatedVertexAlgebra::mode(const GradedVector& u, int64_t n, const GradedVector& v) const {
  GradedVector out;
  for (const auto& [i, a] : u.entries())
    for (const auto& [j, b] : v.entries()) out.add_scaled(mode(i, n, j), a * b);
  return out;
}

std::optional<std::size_t> TruncatedVertexAlgebra::vacuum_index() const {
  if (vacuum_.size() == 1 && vacuum_.entries().begin()->second == Rational(1)) return vacuum_.entries().begin()->first;
  return std::nullopt;
}

void TruncatedVertexAlgebra::check_axioms() const {
  for (std::size_t v = 0; v < dim(); ++v) {
    const GradedVector bv = GradedVector::basis(v);
    for (int64_t n = weight(v) - 1 - cutoff_; n <= weight(v) + 1; ++n) {
      const GradedVector got = mode(vacuum_, n, bv);
      const GradedVector want = n == -1 ? bv : GradedVector{};
      if (got != want)
        throw AxiomError("vacuum axiom violated: 1_" + std::to_string(n) + "(" + space_->label(v) + ") = " +
                         got.str(*space_) + ", expected " + want.str(*space_));
    }
    for (int64_t n = -1; n <= weight(v); ++n) {
      const GradedVector got = mode(bv, n, vacuum_);
      const GradedVector want = n == -1 ? bv : GradedVector{};
      if (got != want)
        throw AxiomError("creation axiom violated: (" + space_->label(v) + ")_" + std::to_string(n) + "1 = " +
                         got.str(*space_) + ", expected " + want.str(*space_));
    }
  }
  for (const auto& [key, value] : modes_) {
    const auto& [u, n, v] = key;
    const int64_t w = weight(u) + weight(v) - n - 1;
    if (w < 0 || w > cutoff_) throw AxiomError("mode entry outside the weight range at " + triple_str(*space_, u, n, v));
    for (const auto& [i, c] : value.entries())
      if (weight(i) != w) throw AxiomError("grading violated at " + triple_str(*space_, u, n, v));
  }
}

std::vector<SkewFailure> check_skew_symmetry(const TruncatedVertexAlgebra& V) {
  if (!V.conformal()) throw std::logic_error("check_skew_symmetry: algebra has no conformal vector");
  const GradedVector& omega = *V.conformal();
  auto translate = [&](const GradedVector& x) { return V.mode(omega, 0, x); };
  std::vector<SkewFailure> failures;
  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v) {
      const int64_t s = V.weight(u) + V.weight(v);
      for (int64_t n = s - 1 - V.cutoff(); n <= s - 1; ++n) {
        const GradedVector lhs = V.mode(u, n, v);
        GradedVector rhs;
        Rational factorial(1);
        for (int64_t j = 0; j <= s - n - 1; ++j) {
          if (j > 0) factorial *= Rational(j);
          GradedVector term = V.mode(v, n + j, u);
          for (int64_t t = 0; t < j; ++t) term = translate(term);
          const Rational sign = ((n + j + 1) % 2 == 0) ? Rational(1) : Rational(-1);
          rhs.add_scaled(term, sign / factorial);
        }
        if (lhs != rhs) failures.push_back({u, v, n, lhs, rhs});
      }
    }
  return failures;
}

void check_automorphism(const TruncatedVertexAlgebra& V, const Automorphism& g) {
  if (g.order < 1) throw AxiomError("automorphism order must be positive");
  if (g.labels.size() != V.dim()) throw AxiomError("automorphism labels do not cover the basis");
  for (auto r : g.labels)
    if (r < 0 || r >= g.order) throw AxiomError("automorphism label outside 0..T-1");
  for (const auto& [i, c] : V.vacuum().entries())
    if (g.label(i) != 0) throw AxiomError("automorphism does not fix the vacuum");
  if (V.conformal())
    for (const auto& [i, c] : V.conformal()->entries())
      if (g.label(i) != 0) throw AxiomError("automorphism does not fix the conformal vector");
  auto check = [&](std::size_t u, int64_t n, std::size_t v, const GradedVector& value) {
    const int64_t want = (g.label(u) + g.label(v)) % g.order;
    for (const auto& [i, c] : value.entries())
      if (g.label(i) != want)
        throw AxiomError("automorphism does not preserve (" + V.space().label(u) + ")_" + std::to_string(n) + "(" +
                         V.space().label(v) + ")");
  };
  if (!V.lazy()) {
    for (const auto& [key, value] : V.mode_table()) check(std::get<0>(key), std::get<1>(key), std::get<2>(key), value);
    return;
  }
  // Lazy data: every pair whose weights sum to at most the cutoff.
  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v) {
      const int64_t s = V.weight(u) + V.weight(v);
      if (s > V.cutoff()) continue;
      for (int64_t n = s - 1 - V.cutoff(); n <= s - 1; ++n) check(u, n, v, V.mode(u, n, v));
    }
}

TruncatedVertexAlgebra truncate_algebra(const TruncatedVertexAlgebra& V, int64_t cutoff,
                                        std::vector<std::size_t>* index_map) {
  if (cutoff < 0 || cutoff > V.cutoff()) throw std::invalid_argument("truncate_algebra: cutoff out of range");
  const std::size_t none = V.dim();
  std::vector<std::size_t> to_new(V.dim(), none), to_old;
  auto space = std::make_shared<GradedSpace>();
  for (std::size_t i = 0; i < V.dim(); ++i) {
    if (V.weight(i) > cutoff) continue;
    to_new[i] = space->add_basis(V.space().degree(i), V.space().label(i));
    to_old.push_back(i);
  }
  auto remap = [&](const GradedVector& v) {
    GradedVector out;
    for (const auto& [i, c] : v.entries()) out.add(to_new[i], c);
    return out;
  };
  std::optional<GradedVector> omega;
  if (V.conformal() && cutoff >= 2) omega = remap(*V.conformal());
  TruncatedVertexAlgebra out(space, cutoff, remap(V.vacuum()), omega);
  for (std::size_t u : to_old)
    for (std::size_t v : to_old) {
      const int64_t s = V.weight(u) + V.weight(v);
      for (int64_t n = s - 1 - cutoff; n <= s - 1; ++n) out.set_mode(to_new[u], n, to_new[v], remap(V.mode(u, n, v)));
    }
  if (index_map) *index_map = std::move(to_old);
  return out;
}

Automorphism restrict_automorphism(const Automorphism& g, const std::vector<std::size_t>& index_map) {
  Automorphism out{g.order, {}};
  for (std::size_t i : index_map) out.labels.push_back(g.label(i));
  return out;
}

std::vector<Subspace> eigenspace_decompose(const TruncatedVertexAlgebra& V, const Automorphism& g) {
  check_automorphism(V, g);
  std::vector<Subspace> out(static_cast<std::size_t>(g.order), Subspace(V.space_ptr()));
  for (std::size_t i = 0; i < V.dim(); ++i) out[static_cast<std::size_t>(g.label(i))].insert(GradedVector::basis(i));
  return out;
}

}  // namespace vtx
