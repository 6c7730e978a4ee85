#include "vtx/zhu/zhu_algebra.hpp"

#include "vtx/exact_core/binomial.hpp"
#include "vtx/residue_identities/identities.hpp"

#include <limits>
#include <stdexcept>

namespace vtx {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

int64_t top_weight(const TruncatedVertexAlgebra& V, const GradedVector& v) {
  int64_t top = -1;
  for (const auto& [i, c] : v.entries()) top = std::max(top, V.weight(i));
  return top;
}

std::string vec_str(const TruncatedVertexAlgebra& V, const GradedVector& v) { return v.str(V.space()); }

}  // namespace

ZhuQuotient::ZhuQuotient(AlgebraPtr V, Kind kind, int64_t level, Automorphism twist, int64_t cap,
                         std::vector<GradedVector> generators)
    : V_(std::move(V)),
      kind_(kind),
      level_(level),
      twist_(std::move(twist)),
      cap_(cap),
      generators_(std::move(generators)),
      to_trunc_(V_->dim(), kNone),
      quotient_([this] {
        auto space = std::make_shared<GradedSpace>();
        for (std::size_t i = 0; i < V_->dim(); ++i) {
          if (V_->weight(i) > cap_) continue;
          to_trunc_[i] = space->add_basis(V_->space().degree(i), V_->space().label(i));
          from_trunc_.push_back(i);
        }
        truncated_ = space;
        Subspace span(truncated_);
        for (const auto& g : generators_) span.insert(to_truncated(g));
        return Quotient(truncated_, std::move(span));
      }()) {
  if (cap_ > V_->cutoff()) throw std::invalid_argument("ZhuQuotient: weight cap above the algebra cutoff");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (product_top_weight(representative_weight(i), representative_weight(j)) > cap_) continue;
      table_[{i, j}] = project(product(representative(i), representative(j)));
    }
}

std::size_t ZhuQuotient::representative(std::size_t i) const { return from_trunc_.at(quotient_.representative(i)); }

GradedVector ZhuQuotient::to_truncated(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [i, c] : v.entries()) {
    if (to_trunc_.at(i) == kNone)
      throw PrecisionError("Zhu quotient: component " + V_->space().label(i) + " lies above weight cap " +
                           std::to_string(cap_));
    out.add(to_trunc_[i], c);
  }
  return out;
}

GradedVector ZhuQuotient::project(const GradedVector& v) const { return quotient_.project(to_truncated(v)); }

bool ZhuQuotient::in_span(const GradedVector& v) const { return quotient_.kernel().contains(to_truncated(v)); }

GradedVector ZhuQuotient::product(std::size_t u, std::size_t v) const {
  return kind_ == Kind::Level ? mult_n(*V_, level_, u, v) : mult_g(*V_, twist_, u, v);
}

GradedVector ZhuQuotient::product(const GradedVector& a, const GradedVector& b) const {
  GradedVector out;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) out.add_scaled(product(i, j), x * y);
  return out;
}

int64_t ZhuQuotient::product_top_weight(int64_t wt_u, int64_t wt_v) const {
  return kind_ == Kind::Level ? wt_u + wt_v + 2 * level_ : wt_u + wt_v;
}

GradedVector ZhuQuotient::multiply(const GradedVector& a, const GradedVector& b) const {
  GradedVector out;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) {
      auto it = table_.find({i, j});
      if (it == table_.end())
        throw PrecisionError("Zhu quotient: product of classes " + std::to_string(i) + " and " + std::to_string(j) +
                             " is above the weight cap");
      out.add_scaled(it->second, x * y);
    }
  return out;
}

void ZhuQuotient::check_invariants() const {
  const TruncatedVertexAlgebra& V = *V_;
  for (const auto& g : generators_)
    if (!in_span(g)) throw AxiomError("generator " + vec_str(V, g) + " survives the projection");

  for (const auto& g : generators_) {
    const int64_t tg = top_weight(V, g);
    for (std::size_t i = 0; i < dim(); ++i) {
      const std::size_t b = representative(i);
      if (product_top_weight(tg, V.weight(b)) > cap_) continue;
      const GradedVector eb = GradedVector::basis(b);
      if (!in_span(product(g, eb)))
        throw AxiomError("product not well defined: (" + vec_str(V, g) + ") * " + V.space().label(b) +
                         " is not in the generator span");
      if (!in_span(product(eb, g)))
        throw AxiomError("product not well defined: " + V.space().label(b) + " * (" + vec_str(V, g) +
                         ") is not in the generator span");
    }
  }

  const GradedVector one = unit();
  for (std::size_t i = 0; i < dim(); ++i) {
    const GradedVector e = GradedVector::basis(i);
    if (product_top_weight(0, representative_weight(i)) > cap_) continue;
    if (multiply(one, e) != e || multiply(e, one) != e)
      throw AxiomError("unit fails on the class of " + V.space().label(representative(i)));
  }

  for (const auto& [ab, xy] : table_) {
    const auto [a, b] = ab;
    for (std::size_t c = 0; c < dim(); ++c) {
      if (table_.count({b, c}) == 0) continue;
      GradedVector left, right;
      try {
        left = multiply(xy, GradedVector::basis(c));
        right = multiply(GradedVector::basis(a), table_.at({b, c}));
      } catch (const PrecisionError&) {
        continue;
      }
      if (left != right)
        throw AxiomError("associativity fails on classes of " + V.space().label(representative(a)) + ", " +
                         V.space().label(representative(b)) + ", " + V.space().label(representative(c)));
    }
  }

  if (kind_ == Kind::Twisted)
    for (std::size_t u = 0; u < V.dim(); ++u)
      if (twist_.label(u) != 0 && V.weight(u) <= cap_ && !in_span(GradedVector::basis(u)))
        throw AxiomError("eigenvector " + V.space().label(u) + " with nonzero label survives the projection");
}

std::vector<GradedVector> o_n_generators(const TruncatedVertexAlgebra& V, int64_t n, int64_t weight_cap) {
  if (n < 0) throw std::invalid_argument("o_n_generators: n must be nonnegative");
  std::vector<GradedVector> out;
  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v) {
      if (V.weight(u) + V.weight(v) + 2 * n + 1 > weight_cap) continue;
      GradedVector g = binomial_iterate(V, ScaledExponent(V.weight(u) + n), u, -2 * n - 2, v);
      if (!g.is_zero()) out.push_back(std::move(g));
    }
  return out;
}

std::vector<GradedVector> conformal_generators(const TruncatedVertexAlgebra& V, int64_t weight_cap) {
  if (!V.conformal()) throw std::logic_error("conformal_generators: algebra has no conformal vector");
  std::vector<GradedVector> out;
  for (std::size_t u = 0; u < V.dim(); ++u) {
    if (V.weight(u) + 1 > weight_cap) continue;
    GradedVector x = V.mode(*V.conformal(), 0, GradedVector::basis(u));
    x.add(u, Rational(V.weight(u)));
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

std::vector<GradedVector> o_g_generators(const TruncatedVertexAlgebra& V, const Automorphism& g, int64_t weight_cap) {
  std::vector<GradedVector> out;
  for (std::size_t u = 0; u < V.dim(); ++u) {
    const int64_t delta = g.delta(u);
    const ScaledExponent e = ScaledExponent(V.weight(u) - 1 + delta) + g.shift(u);
    for (std::size_t v = 0; v < V.dim(); ++v) {
      if (V.weight(u) + V.weight(v) + delta > weight_cap) continue;
      GradedVector x = binomial_iterate(V, e, u, -1 - delta, v);
      if (!x.is_zero()) out.push_back(std::move(x));
    }
  }
  return out;
}

GradedVector mult_n(const TruncatedVertexAlgebra& V, int64_t n, std::size_t u, std::size_t v) {
  GradedVector out;
  const ScaledExponent e(V.weight(u) + n);
  for (int64_t m = 0; m <= n; ++m) {
    const Rational c = binomial_coefficient(Rational(m + n), n) * Rational(m % 2 == 0 ? 1 : -1);
    out.add_scaled(binomial_iterate(V, e, u, -n - m - 1, v), c);
  }
  return out;
}

GradedVector mult_g(const TruncatedVertexAlgebra& V, const Automorphism& g, std::size_t u, std::size_t v) {
  if (g.label(u) != 0) return {};
  return binomial_iterate(V, ScaledExponent(V.weight(u)), u, -1, v);
}

bool extended_membership_n(const ZhuQuotient& Q, std::size_t u, std::size_t v, int64_t m, int64_t k) {
  if (Q.kind() != ZhuQuotient::Kind::Level) throw std::invalid_argument("extended_membership_n: level quotient required");
  if (!(m >= k && k >= 0)) throw std::invalid_argument("extended_membership_n: requires m >= k >= 0");
  const TruncatedVertexAlgebra& V = Q.algebra();
  const int64_t n = Q.level();
  if (V.weight(u) + V.weight(v) + m + 2 * n + 1 > Q.weight_cap())
    throw PrecisionError("extended_membership_n: element reaches above the weight cap");
  return Q.in_span(binomial_iterate(V, ScaledExponent(V.weight(u) + n + k), u, -m - 2 * n - 2, v));
}

bool extended_membership_g(const ZhuQuotient& Q, std::size_t u, std::size_t v, int64_t m, int64_t k) {
  if (Q.kind() != ZhuQuotient::Kind::Twisted)
    throw std::invalid_argument("extended_membership_g: twisted quotient required");
  if (!(m >= k && k >= 0)) throw std::invalid_argument("extended_membership_g: requires m >= k >= 0");
  const TruncatedVertexAlgebra& V = Q.algebra();
  const Automorphism& g = Q.twist();
  const int64_t delta = g.delta(u);
  if (V.weight(u) + V.weight(v) + m + delta > Q.weight_cap())
    throw PrecisionError("extended_membership_g: element reaches above the weight cap");
  const ScaledExponent e = ScaledExponent(V.weight(u) - 1 + delta + k) + g.shift(u);
  return Q.in_span(binomial_iterate(V, e, u, -m - delta - 1, v));
}

ZhuQuotient build_A_n(const AlgebraPtr& V, int64_t n, int64_t weight_cap) {
  std::vector<GradedVector> gens = o_n_generators(*V, n, weight_cap);
  if (n >= 1 && V->conformal())
    for (auto& x : conformal_generators(*V, weight_cap)) gens.push_back(std::move(x));
  ZhuQuotient Q(V, ZhuQuotient::Kind::Level, n, Automorphism::identity(V->dim()), weight_cap, std::move(gens));
  Q.check_invariants();
  return Q;
}

ZhuQuotient build_A_g(const AlgebraPtr& V, const Automorphism& g, int64_t weight_cap) {
  check_automorphism(*V, g);
  ZhuQuotient Q(V, ZhuQuotient::Kind::Twisted, 0, g, weight_cap, o_g_generators(*V, g, weight_cap));
  Q.check_invariants();
  return Q;
}

std::vector<std::size_t> filtered_dims(const ZhuQuotient& Q) {
  std::vector<std::size_t> out;
  for (int64_t w = 0; w <= Q.weight_cap(); ++w) out.push_back(Q.dim_at(w));
  return out;
}

int64_t stable_weight(const ZhuQuotient& lower, const ZhuQuotient& higher) {
  const auto a = filtered_dims(lower), b = filtered_dims(higher);
  int64_t w = -1;
  while (static_cast<std::size_t>(w + 1) < std::min(a.size(), b.size()) && a[w + 1] == b[w + 1]) ++w;
  return w;
}

}  // namespace vtx
