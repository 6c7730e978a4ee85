#pragma once

#include "vtx/exact_core/errors.hpp"
#include "vtx/graded_linear/subspace.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace vtx {

/// Finite order automorphism stored in a g-diagonal basis: basis vector i
/// spans an eigenline with eigenvalue exp(2 pi i r_i / T), and only the label
/// r_i is kept.
struct Automorphism {
  int64_t order = 1;
  std::vector<int64_t> labels;

  static Automorphism identity(std::size_t dim) { return {1, std::vector<int64_t>(dim, 0)}; }
  [[nodiscard]] int64_t label(std::size_t i) const { return labels.at(i); }
  /// r/T as an exponent.
  [[nodiscard]] ScaledExponent shift(std::size_t i) const { return ScaledExponent(labels.at(i), order); }
  /// 1 when r = 0, else 0.
  [[nodiscard]] int64_t delta(std::size_t i) const { return labels.at(i) == 0 ? 1 : 0; }
};

/// Weight-graded vertex algebra truncated at weight `cutoff`.
///
/// The mode table stores u_n v for basis vectors u, v. Entries not present
/// are zero as long as the product weight wt u + wt v - n - 1 lies in
/// [0, cutoff]; products above the cutoff are overflow and any request for
/// them throws PrecisionError.
///
/// A lazy algebra has a mode source instead: entries are computed on first
/// request and cached, and the table holds only what has been requested.
class TruncatedVertexAlgebra {
 public:
  using ModeKey = std::tuple<std::size_t, int64_t, std::size_t>;
  using ModeSource = std::function<GradedVector(std::size_t u, int64_t n, std::size_t v)>;

  TruncatedVertexAlgebra(SpacePtr space, int64_t cutoff, GradedVector vacuum,
                         std::optional<GradedVector> conformal);

  [[nodiscard]] const GradedSpace& space() const { return *space_; }
  [[nodiscard]] const SpacePtr& space_ptr() const { return space_; }
  [[nodiscard]] std::size_t dim() const { return space_->dim(); }
  [[nodiscard]] int64_t cutoff() const { return cutoff_; }
  [[nodiscard]] int64_t weight(std::size_t i) const { return space_->degree(i).as_integer(); }
  [[nodiscard]] const GradedVector& vacuum() const { return vacuum_; }
  [[nodiscard]] const std::optional<GradedVector>& conformal() const { return conformal_; }
  /// Stored entries; for a lazy algebra call materialize() first to see all of them.
  [[nodiscard]] const std::map<ModeKey, GradedVector>& mode_table() const { return modes_; }

  void set_source(ModeSource source) { source_ = std::move(source); }
  [[nodiscard]] bool lazy() const { return static_cast<bool>(source_); }
  /// Requests every in-range entry, so that mode_table() is complete.
  void materialize() const;

  /// Stores u_n v; throws AxiomError if the entry is not homogeneous of the
  /// graded weight or if n >= wt u + wt v.
  void set_mode(std::size_t u, int64_t n, std::size_t v, GradedVector value);
  /// Overwrites one coefficient without validation (used to build deliberately broken data).
  void perturb(std::size_t u, int64_t n, std::size_t v, std::size_t component, const Rational& delta);

  [[nodiscard]] bool is_overflow(std::size_t u, int64_t n, std::size_t v) const;
  /// u_n v for basis vectors.
  [[nodiscard]] GradedVector mode(std::size_t u, int64_t n, std::size_t v) const;
  /// u_n v extended bilinearly.
  [[nodiscard]] GradedVector mode(const GradedVector& u, int64_t n, const GradedVector& v) const;

  /// Checks vacuum, creation, grading and lower truncation on every basis
  /// pair; throws AxiomError naming the first failing triple.
  void check_axioms() const;

  /// Basis index of the vacuum when it is a single basis vector.
  [[nodiscard]] std::optional<std::size_t> vacuum_index() const;

 private:
  SpacePtr space_;
  int64_t cutoff_;
  GradedVector vacuum_;
  std::optional<GradedVector> conformal_;
  mutable std::map<ModeKey, GradedVector> modes_;
  mutable std::set<ModeKey> known_zero_;
  ModeSource source_;
};

struct SkewFailure {
  std::size_t u, v;
  int64_t n;
  GradedVector lhs, rhs;
};

/// Verifies u_n v = sum_j (-1)^{n+j+1} L(-1)^j/j! v_{n+j} u for every basis
/// pair and every n with product weight inside the cutoff. L(-1) = omega_0.
/// Throws std::logic_error when the algebra has no conformal vector.
std::vector<SkewFailure> check_skew_symmetry(const TruncatedVertexAlgebra& V);

/// Throws AxiomError unless labels are compatible with the mode table:
/// u in V^r, v in V^s implies u_n v in V^{r+s mod T}. A lazy algebra is
/// checked on the pairs with wt u + wt v <= cutoff.
void check_automorphism(const TruncatedVertexAlgebra& V, const Automorphism& g);

/// Subalgebra data on the basis vectors of weight <= cutoff. index_map, when
/// given, receives the old index of each new basis vector.
TruncatedVertexAlgebra truncate_algebra(const TruncatedVertexAlgebra& V, int64_t cutoff,
                                        std::vector<std::size_t>* index_map = nullptr);
/// Restriction of g to the basis kept by truncate_algebra.
Automorphism restrict_automorphism(const Automorphism& g, const std::vector<std::size_t>& index_map);

/// Eigenspaces V^0, ..., V^{T-1}.
std::vector<Subspace> eigenspace_decompose(const TruncatedVertexAlgebra& V, const Automorphism& g);

}  // namespace vtx
