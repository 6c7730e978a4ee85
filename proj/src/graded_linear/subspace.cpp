#include "vtx/graded_linear/subspace.hpp"

#include <stdexcept>

namespace vtx {

Subspace::Subspace(SpacePtr ambient) : space_(std::move(ambient)) {
  if (!space_) throw std::invalid_argument("Subspace: null ambient space");
}

std::size_t Subspace::rank_at(const ScaledExponent& d) const {
  std::size_t n = 0;
  for (const auto& [k, row] : rows_)
    if (k.first == -d) ++n;
  return n;
}

std::vector<GradedVector> Subspace::basis() const {
  std::vector<GradedVector> out;
  out.reserve(rows_.size());
  for (const auto& [k, row] : rows_) out.push_back(row);
  return out;
}

std::size_t Subspace::pivot_of(const GradedVector& v) const {
  std::optional<Key> best;
  for (const auto& [i, c] : v.entries()) {
    const Key k = key(i);
    if (!best || k < *best) best = k;
  }
  return best->second;
}

GradedVector Subspace::reduce(const GradedVector& v) const {
  GradedVector r = v;
  for (const auto& [i, c] : v.entries()) {
    auto pc = pivot_cols_.find(i);
    if (pc == pivot_cols_.end()) continue;
    const Rational coeff = r.at(i);
    if (!coeff.is_zero()) r.add_scaled(rows_.at(pc->second), -coeff);
  }
  return r;
}

bool Subspace::insert(const GradedVector& v) {
  for (const auto& [i, c] : v.entries())
    if (i >= space_->dim()) throw std::out_of_range("Subspace::insert: index outside ambient space");
  GradedVector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = pivot_of(r);
  r = r.scaled(Rational(1) / r.at(p));
  for (auto& [k, row] : rows_) {
    const Rational c = row.at(p);
    if (!c.is_zero()) row.add_scaled(r, -c);
  }
  const Key k = key(p);
  rows_.emplace(k, std::move(r));
  pivot_cols_.emplace(p, k);
  return true;
}

Subspace span_close(const SpacePtr& space, const std::vector<GradedVector>& vectors) {
  Subspace s(space);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace kernel_of(const SpacePtr& domain, const std::vector<std::size_t>& columns,
                   const std::vector<GradedVector>& images, std::size_t codim) {
  if (columns.size() != images.size()) throw std::invalid_argument("kernel_of: one image per column");
  const std::size_t n = domain->dim();
  ScaledExponent top(0);
  for (const auto& [d, idx] : domain->components()) top = std::max(top, d);
  // Image coordinates sit above every domain degree so they pivot first.
  auto doubled = std::make_shared<GradedSpace>(domain->grading_scale());
  for (std::size_t i = 0; i < n; ++i) doubled->add_basis(domain->degree(i), "");
  for (std::size_t j = 0; j < codim; ++j) doubled->add_basis(top + ScaledExponent(1), "");
  Subspace z(doubled);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    GradedVector d = GradedVector::basis(columns[k]);
    for (const auto& [j, c] : images[k].entries()) {
      if (j >= codim) throw std::invalid_argument("kernel_of: image coordinate out of range");
      d.add(n + j, c);
    }
    z.insert(d);
  }
  Subspace out(domain);
  for (const auto& row : z.basis()) {
    if (!row.entries().empty() && row.entries().rbegin()->first >= n) continue;
    out.insert(row);
  }
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() && !(*a.ambient() == *b.ambient()))
    throw std::invalid_argument("intersect: different ambient spaces");
  const GradedSpace& amb = *a.ambient();
  const std::size_t n = amb.dim();
  // Doubled space: left copy gets higher priority (degree shifted up by a
  // constant larger than any degree gap), right copy keeps the true degrees.
  ScaledExponent lo(0), hi(0);
  for (const auto& [d, idx] : amb.components()) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  const ScaledExponent shift = hi - lo + ScaledExponent(1);
  auto doubled = std::make_shared<GradedSpace>(amb.grading_scale());
  for (std::size_t i = 0; i < n; ++i) doubled->add_basis(amb.degree(i) + shift, "");
  for (std::size_t i = 0; i < n; ++i) doubled->add_basis(amb.degree(i), "");
  Subspace z(doubled);
  for (const auto& row : a.basis()) {
    GradedVector d;
    for (const auto& [i, c] : row.entries()) {
      d.add(i, c);
      d.add(i + n, c);
    }
    z.insert(d);
  }
  for (const auto& row : b.basis()) {
    GradedVector d;
    for (const auto& [i, c] : row.entries()) d.add(i, c);
    z.insert(d);
  }
  Subspace out(a.ambient());
  for (const auto& row : z.basis()) {
    bool right_only = true;
    GradedVector r;
    for (const auto& [i, c] : row.entries()) {
      if (i < n) { right_only = false; break; }
      r.add(i - n, c);
    }
    if (right_only) out.insert(r);
  }
  return out;
}

Quotient::Quotient(SpacePtr space, Subspace sub) : ambient_(std::move(space)), sub_(std::move(sub)) {
  auto q = std::make_shared<GradedSpace>(ambient_->grading_scale());
  for (std::size_t i = 0; i < ambient_->dim(); ++i) {
    if (sub_.is_pivot(i)) continue;
    coord_of_[i] = reps_.size();
    reps_.push_back(i);
    q->add_basis(ambient_->degree(i), ambient_->label(i));
  }
  quotient_space_ = std::move(q);
}

GradedVector Quotient::project(const GradedVector& v) const {
  GradedVector out;
  const GradedVector r = sub_.reduce(v);
  for (const auto& [i, c] : r.entries()) out.add(coord_of_.at(i), c);
  return out;
}

GradedVector Quotient::lift(const GradedVector& q) const {
  GradedVector out;
  for (const auto& [i, c] : q.entries()) out.add(reps_.at(i), c);
  return out;
}

Quotient quotient(const SpacePtr& space, const Subspace& sub) { return Quotient(space, sub); }

}  // namespace vtx
