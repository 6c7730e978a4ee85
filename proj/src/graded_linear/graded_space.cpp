#include "vtx/graded_linear/graded_space.hpp"

#include <sstream>
#include <stdexcept>

namespace vtx {

std::size_t GradedSpace::add_basis(ScaledExponent degree, std::string label) {
  if ((degree * scale_).scale() != 1)
    throw std::invalid_argument("GradedSpace: degree " + degree.str() + " not in (1/" +
                                std::to_string(scale_) + ")Z");
  const std::size_t idx = degree_.size();
  if (!label.empty()) {
    if (by_label_.count(label)) throw std::invalid_argument("GradedSpace: duplicate label " + label);
    by_label_[label] = idx;
  }
  degree_.push_back(degree);
  label_.push_back(std::move(label));
  comps_[degree].push_back(idx);
  return idx;
}

const std::vector<std::size_t>& GradedSpace::component(const ScaledExponent& d) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = comps_.find(d);
  return it == comps_.end() ? kEmpty : it->second;
}

std::size_t GradedSpace::find(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? dim() : it->second;
}

void GradedVector::add(std::size_t i, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e_.erase(it);
  }
}

void GradedVector::add_scaled(const GradedVector& o, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : o.e_) add(i, x * c);
}

GradedVector GradedVector::scaled(const Rational& c) const {
  GradedVector out;
  if (c.is_zero()) return out;
  for (const auto& [i, x] : e_) out.e_.emplace(i, x * c);
  return out;
}

std::string GradedVector::str(const GradedSpace& space) const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << (space.label(i).empty() ? "e" + std::to_string(i) : space.label(i));
  }
  return os.str();
}

std::string GradedVector::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*e" << i;
  }
  return os.str();
}

std::map<ScaledExponent, GradedVector> split_by_degree(const GradedSpace& space, const GradedVector& v) {
  std::map<ScaledExponent, GradedVector> out;
  for (const auto& [i, c] : v.entries()) out[space.degree(i)].add(i, c);
  return out;
}

}  // namespace vtx
