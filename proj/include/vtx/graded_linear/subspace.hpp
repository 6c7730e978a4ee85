#pragma once

#include "vtx/graded_linear/graded_space.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace vtx {

/// Subspace of a GradedSpace held as a reduced row echelon basis.
///
/// Pivot columns are chosen by the fixed order (degree descending, basis
/// index ascending): the pivot of a vector is its highest-degree entry, ties
/// broken by the smallest index. Every basis row has pivot coefficient 1 and
/// no other row has a nonzero entry in that column, so the basis is canonical
/// for the span.
class Subspace {
 public:
  explicit Subspace(SpacePtr ambient);

  [[nodiscard]] const SpacePtr& ambient() const { return space_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  /// Number of basis rows whose pivot has degree d.
  [[nodiscard]] std::size_t rank_at(const ScaledExponent& d) const;
  /// Basis rows in pivot order.
  [[nodiscard]] std::vector<GradedVector> basis() const;
  [[nodiscard]] bool is_pivot(std::size_t column) const { return pivot_cols_.count(column) != 0; }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(const GradedVector& v);
  /// Remainder of v after eliminating every pivot column.
  [[nodiscard]] GradedVector reduce(const GradedVector& v) const;
  [[nodiscard]] bool contains(const GradedVector& v) const { return reduce(v).is_zero(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

 private:
  using Key = std::pair<ScaledExponent, std::size_t>;  // (-degree, index): smaller key = higher priority
  [[nodiscard]] Key key(std::size_t column) const { return {-space_->degree(column), column}; }
  [[nodiscard]] std::size_t pivot_of(const GradedVector& v) const;

  SpacePtr space_;
  std::map<Key, GradedVector> rows_;
  std::map<std::size_t, Key> pivot_cols_;
};

/// Reduced echelon basis of the span of `vectors`. All vectors live in `space`.
Subspace span_close(const SpacePtr& space, const std::vector<GradedVector>& vectors);

/// Exact intersection (Zassenhaus). Throws std::invalid_argument on different ambients.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Kernel of the linear map sending domain basis vector columns[k] to
/// images[k], a vector of a flat codomain with `codim` coordinates. The
/// result is a subspace of the domain spanned by the given columns.
Subspace kernel_of(const SpacePtr& domain, const std::vector<std::size_t>& columns,
                   const std::vector<GradedVector>& images, std::size_t codim);

/// Quotient space together with its projection.
///
/// The quotient basis is the set of non-pivot columns of `sub`, so each
/// quotient basis vector has a representative that is a single ambient basis
/// vector (the lexicographically least echelon complement).
class Quotient {
 public:
  Quotient(SpacePtr space, Subspace sub);

  [[nodiscard]] const GradedSpace& space() const { return *quotient_space_; }
  [[nodiscard]] const SpacePtr& space_ptr() const { return quotient_space_; }
  [[nodiscard]] const Subspace& kernel() const { return sub_; }
  [[nodiscard]] std::size_t dim() const { return reps_.size(); }
  [[nodiscard]] std::size_t dim_at(const ScaledExponent& d) const { return quotient_space_->dim_at(d); }
  /// Ambient basis index representing quotient basis vector i.
  [[nodiscard]] std::size_t representative(std::size_t i) const { return reps_.at(i); }
  /// Quotient coordinates of an ambient vector.
  [[nodiscard]] GradedVector project(const GradedVector& v) const;
  /// Lifts quotient coordinates to the representative combination.
  [[nodiscard]] GradedVector lift(const GradedVector& q) const;

 private:
  SpacePtr ambient_;
  Subspace sub_;
  std::vector<std::size_t> reps_;
  std::map<std::size_t, std::size_t> coord_of_;
  SpacePtr quotient_space_;
};

Quotient quotient(const SpacePtr& space, const Subspace& sub);

}  // namespace vtx
