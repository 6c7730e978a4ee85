#pragma once

#include "vtx/vertex_data/algebra.hpp"
#include "vtx/vertex_data/fock.hpp"

#include <iosfwd>
#include <memory>

namespace vtx {

using AlgebraPtr = std::shared_ptr<const TruncatedVertexAlgebra>;

/// Graded space W with tabulated actions u_n w, truncated at degree `cutoff`.
///
/// For u in V^r the modes n run over r/T + Z. Entries not stored are zero as
/// long as the result degree deg w + wt u - n - 1 lies in [0, cutoff]; results
/// above the cutoff are overflow and requesting them throws PrecisionError.
class ModuleData {
 public:
  using ActionKey = std::tuple<std::size_t, ScaledExponent, std::size_t>;

  ModuleData(AlgebraPtr algebra, Automorphism twist, SpacePtr space, ScaledExponent cutoff);

  [[nodiscard]] const TruncatedVertexAlgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return algebra_; }
  [[nodiscard]] const Automorphism& twist() const { return twist_; }
  [[nodiscard]] const GradedSpace& space() const { return *space_; }
  [[nodiscard]] const SpacePtr& space_ptr() const { return space_; }
  [[nodiscard]] const ScaledExponent& cutoff() const { return cutoff_; }
  [[nodiscard]] const ScaledExponent& degree(std::size_t w) const { return space_->degree(w); }
  [[nodiscard]] const std::map<ActionKey, GradedVector>& action_table() const { return actions_; }

  /// True when n lies in r/T + Z for u in V^r.
  [[nodiscard]] bool in_lattice(std::size_t u, const ScaledExponent& n) const;
  /// Smallest element of r/T + Z that is >= x.
  [[nodiscard]] ScaledExponent lattice_ceil(std::size_t u, const ScaledExponent& x) const;
  /// deg w + wt u - n - 1.
  [[nodiscard]] ScaledExponent result_degree(std::size_t u, const ScaledExponent& n, std::size_t w) const;

  void set_action(std::size_t u, const ScaledExponent& n, std::size_t w, GradedVector value);
  /// Adds delta to one coefficient without validation.
  void perturb(std::size_t u, const ScaledExponent& n, std::size_t w, std::size_t component, const Rational& delta);

  /// u_n w for basis vectors; zero off the mode lattice.
  [[nodiscard]] GradedVector act(std::size_t u, const ScaledExponent& n, std::size_t w) const;
  [[nodiscard]] GradedVector act(std::size_t u, const ScaledExponent& n, const GradedVector& w) const;
  /// Bilinear extension in u; components of u whose lattice does not contain n contribute zero.
  [[nodiscard]] GradedVector act(const GradedVector& u, const ScaledExponent& n, const GradedVector& w) const;

  /// Throws AxiomError if a stored entry violates the grading or the vacuum acts nontrivially.
  void check_axioms() const;

 private:
  AlgebraPtr algebra_;
  Automorphism twist_;
  SpacePtr space_;
  ScaledExponent cutoff_;
  std::map<ActionKey, GradedVector> actions_;
};

/// Tabulates the oracle's Fock module on all states of degree <= cutoff.
/// The algebra must carry Heisenberg labels (see heisenberg_label).
ModuleData build_fock_module(const AlgebraPtr& V, const Automorphism& twist, FockOracle& oracle,
                             const ScaledExponent& cutoff);

/// Label of a Fock module state: "a(-k/T)...|>" with the parts in descending order.
std::string fock_label(const FockOracle& oracle, const FockOracle::State& s);

/// Reads a module document: [module] with 'scale T', optional 'cutoff D' and
/// 'degree d : labels' lines, then [action u n w] sections of coordinates.
ModuleData load_module(std::istream& in, const AlgebraPtr& V, const Automorphism& twist);
ModuleData load_module_file(const std::string& path, const AlgebraPtr& V, const Automorphism& twist);
void write_module(std::ostream& out, const ModuleData& M);

}  // namespace vtx
