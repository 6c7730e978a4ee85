#pragma once

#include "vtx/induction/induced.hpp"
#include "vtx/residue_identities/identities.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vtx {

/// Counts for one family of exact checks. `witness` describes the first failure.
struct CheckCount {
  std::size_t pass = 0, fail = 0, vacuous = 0, uncertified = 0;
  std::string witness;
  [[nodiscard]] bool ok() const { return fail == 0; }
  void record(CheckTag tag, const std::string& what);
};

struct AdmissibilityReport {
  CheckCount axioms, vacuum, associativity, residue, jacobi;
  [[nodiscard]] bool ok() const {
    return axioms.ok() && vacuum.ok() && associativity.ok() && residue.ok() && jacobi.ok();
  }
};

struct AdmissibilityOptions {
  std::uint64_t seed = 1;
  /// Certified Jacobi tuples to draw; sampling stops after `jacobi_attempts` draws.
  std::size_t jacobi_samples = 200;
  std::size_t jacobi_attempts = 20000;
  /// Jacobi windows with at most this many tuples are enumerated instead of sampled.
  std::size_t exhaustive_limit = 0;
  /// Also run the product/iterate and truncation residue sweeps on every triple.
  bool residue_sweep = true;
};

/// Vacuum and grading axioms, weak associativity on every triple of basis
/// vectors, optionally the residue sweeps, and Jacobi components on seeded tuples.
AdmissibilityReport check_admissible(const ModuleData& M, const AdmissibilityOptions& options = {});

struct EmbeddingReport {
  /// The base degree holds exactly the pure W normal forms.
  bool base_is_w = false;
  /// The base degree of the quotient has dimension dim W and e_W is injective.
  bool injective = false;
  std::string witness;
  /// Untwisted: a single mode on an iterate sum on W, and a mode, an iterate
  /// sum and a mode on W.
  CheckCount iterate_sum, mode_iterate_mode;
  /// Twisted families split by N < 0, N >= 0 with M > N, and N >= M. The first
  /// two must already be zero as normal forms, before the relations.
  CheckCount negative_n, negative_middle, general;
  [[nodiscard]] bool ok() const {
    return base_is_w && injective && iterate_sum.ok() && mode_iterate_mode.ok() && negative_n.ok() && negative_middle.ok() &&
           general.ok();
  }
};

/// Elements are built from basis vectors of weight <= element_weight; the
/// integer m runs over `m_span` values below its bound.
EmbeddingReport check_embedding(const InducedModule& S, int64_t element_weight = 1, int64_t m_span = 2);

/// Module coordinates of the image of every module basis vector.
using ModuleMap = std::vector<GradedVector>;

/// S(f): u(m)w -> u(m)f(w) on the normal forms of S1. Throws
/// std::invalid_argument if f does not intertwine the Zhu actions.
ModuleMap induced_map(const InducedModule& S1, const InducedModule& S2, const LinearMap& f);

/// Compares phi(x_r b) with x_r phi(b) for every acting basis vector x, module
/// basis vector b and mode r that keeps both sides in degrees 0..cutoff.
CheckCount check_intertwines(const ModuleData& source, const ModuleData& target, const ModuleMap& phi,
                             const std::vector<std::size_t>& target_index);

/// (g o f) as matrices of module coordinates.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct UniversalReport {
  ModuleMap map;
  /// f lands in Omega and intertwines o(x) with rho(x + O).
  bool omega_map = false;
  /// Every relation of degree <= cutoff maps to zero.
  CheckCount relations;
  CheckCount intertwining;
  /// Every module basis vector is a single mode on W, so an extension of f is determined.
  bool determined = false;
  /// phi o e_W = f.
  bool restricts = false;
  /// Bijective in every degree 0..cutoff.
  bool isomorphism = false;
  std::string witness;
  [[nodiscard]] bool ok() const {
    return omega_map && relations.ok() && intertwining.ok() && determined && restricts;
  }
};

/// The map S(W) -> target extending f: W -> Omega(target), u(m)w -> u_m f(w).
/// The target must be a module over the algebra of S.
UniversalReport universal_map(const InducedModule& S, const ModuleData& target, const LinearMap& f);

/// Reduces u(p)v(q)z(s)w right to left and pair first, for u, v, z of weight
/// <= weight and every mode whose suffix degrees lie in [-1, cutoff], and
/// compares the results modulo the relations.
CheckCount check_confluence(const InducedModule& S, int64_t weight);

}  // namespace vtx
