#pragma once

#include "vtx/exact_core/rational.hpp"
#include "vtx/exact_core/scaled_exponent.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vtx {

/// Finite-dimensional (1/T)Z-graded space with an ordered, labelled basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(int64_t grading_scale) : scale_(grading_scale) {}

  /// Appends a basis vector of the given degree; returns its index.
  std::size_t add_basis(ScaledExponent degree, std::string label);

  [[nodiscard]] std::size_t dim() const { return degree_.size(); }
  [[nodiscard]] int64_t grading_scale() const { return scale_; }
  [[nodiscard]] const ScaledExponent& degree(std::size_t i) const { return degree_.at(i); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return label_.at(i); }
  /// Basis indices of one homogeneous component (empty when absent).
  [[nodiscard]] const std::vector<std::size_t>& component(const ScaledExponent& d) const;
  [[nodiscard]] std::size_t dim_at(const ScaledExponent& d) const { return component(d).size(); }
  [[nodiscard]] const std::map<ScaledExponent, std::vector<std::size_t>>& components() const { return comps_; }
  /// Index of the basis vector with this label, or dim() when absent.
  [[nodiscard]] std::size_t find(const std::string& label) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.scale_ == b.scale_ && a.degree_ == b.degree_ && a.label_ == b.label_;
  }

 private:
  int64_t scale_ = 1;
  std::vector<ScaledExponent> degree_;
  std::vector<std::string> label_;
  std::map<ScaledExponent, std::vector<std::size_t>> comps_;
  std::map<std::string, std::size_t> by_label_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Sparse vector over a GradedSpace basis: index -> nonzero Rational.
class GradedVector {
 public:
  GradedVector() = default;
  static GradedVector basis(std::size_t i, Rational c = Rational(1)) {
    GradedVector v;
    v.add(i, c);
    return v;
  }

  [[nodiscard]] const std::map<std::size_t, Rational>& entries() const { return e_; }
  [[nodiscard]] bool is_zero() const { return e_.empty(); }
  [[nodiscard]] std::size_t size() const { return e_.size(); }
  [[nodiscard]] Rational at(std::size_t i) const {
    auto it = e_.find(i);
    return it == e_.end() ? Rational(0) : it->second;
  }

  void add(std::size_t i, const Rational& c);
  /// *this += c * o
  void add_scaled(const GradedVector& o, const Rational& c);
  [[nodiscard]] GradedVector scaled(const Rational& c) const;

  GradedVector& operator+=(const GradedVector& o) { add_scaled(o, Rational(1)); return *this; }
  GradedVector& operator-=(const GradedVector& o) { add_scaled(o, Rational(-1)); return *this; }
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend bool operator==(const GradedVector&, const GradedVector&) = default;

  /// "c*label + ..." using the space's labels, or "0".
  [[nodiscard]] std::string str(const GradedSpace& space) const;
  [[nodiscard]] std::string str() const;

 private:
  std::map<std::size_t, Rational> e_;
};

inline bool coeff_is_zero(const GradedVector& v) { return v.is_zero(); }
inline GradedVector coeff_scale(const Rational& s, const GradedVector& v) { return v.scaled(s); }
inline std::string coeff_str(const GradedVector& v) { return v.str(); }

/// Splits a vector into homogeneous parts keyed by degree.
std::map<ScaledExponent, GradedVector> split_by_degree(const GradedSpace& space, const GradedVector& v);

}  // namespace vtx
