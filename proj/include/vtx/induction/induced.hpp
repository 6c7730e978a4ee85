#pragma once

#include "vtx/zhu/lowest_weight.hpp"

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

namespace vtx {

struct ModeTerm {
  std::size_t u = 0;
  ScaledExponent m;
};

/// u1(m1) ... uk(mk) w with the leftmost mode first; w in coordinates of the context module.
struct TensorWord {
  std::vector<ModeTerm> modes;
  GradedVector base;
};

struct InductionParams {
  /// Degrees 0..cutoff are reported and tabulated.
  ScaledExponent cutoff;
  /// Relations are generated up to cutoff + margin so that lowering modes
  /// acting on higher relations are seen.
  ScaledExponent margin{1};
  /// Relations are closed under the modes of basis vectors up to this weight,
  /// and the tabulated module is over the algebra truncated at this weight.
  int64_t action_weight = 2;
  /// Weight bound on the left element u of the consistency and truncation
  /// families; -1 uses every basis vector. All added relations are valid for
  /// any bound, so a small bound only risks a module that fails verification.
  int64_t generator_weight = -1;
  /// Also add u(p)v(q)X - (pair formula on X) for representative tails X.
  bool pair_relations = false;
  /// Extra weights above the spanning weight that must add no representatives;
  /// -1 uses the order of the twist, so a parity gap is not mistaken for the end.
  int64_t stability = -1;
  /// Build the tabulated module (off for dimension-only runs).
  bool tabulate = true;
  /// Words added to the relation span as they are; used to plant a bad relation in tests.
  std::vector<TensorWord> extra_relations;
};

struct InductionStats {
  std::size_t consistency = 0, pair = 0, truncation = 0, closure = 0, uncertified = 0;
};

/// Induced module S(W) built degree by degree as a quotient of the span of
/// normal forms: pure vectors w of W at the base degree (n for level n, 0
/// twisted) and single words u(m)w at every other degree in 0..work cutoff.
///
/// Words are rewritten right to left: (a) a word whose suffix has negative
/// degree is zero, (b) o(u)w = u(wt u - 1)w becomes rho(u + O)w on W, and
/// (c) u(p)v(q)w with w in W expands by the product-to-iterate formula with
/// k, l the grading bounds of v and u on w. The relation span contains the
/// (b)/(c) consistency relations, the truncation family and is closed under
/// modes up to the action weight.
class InducedModule {
 public:
  InducedModule(AlgebraPtr V, std::shared_ptr<const AModule> context, InductionParams params);

  [[nodiscard]] const TruncatedVertexAlgebra& algebra() const { return *V_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const { return V_; }
  [[nodiscard]] const AModule& context() const { return *W_; }
  [[nodiscard]] const Automorphism& twist() const { return twist_; }
  [[nodiscard]] bool twisted() const { return W_->quotient().kind() == ZhuQuotient::Kind::Twisted; }
  [[nodiscard]] const ScaledExponent& base_degree() const { return base_; }
  [[nodiscard]] const InductionParams& params() const { return params_; }
  [[nodiscard]] ScaledExponent work_cutoff() const { return params_.cutoff + params_.margin; }
  [[nodiscard]] const InductionStats& stats() const { return stats_; }

  /// Span of normal forms and the relation subspace inside it.
  [[nodiscard]] const SpacePtr& words() const { return words_; }
  [[nodiscard]] const Subspace& relations() const { return relations_; }
  /// Normal form index of u(m)w0, if it is a normal form inside the work window.
  [[nodiscard]] std::optional<std::size_t> word_index(std::size_t u, const ScaledExponent& m, std::size_t w0) const;
  [[nodiscard]] std::size_t base_index(std::size_t w0) const { return base_index_.at(w0); }
  /// Normal form with index idx as a word: no modes for a pure vector of W.
  [[nodiscard]] TensorWord word(std::size_t idx) const;

  /// Smallest mode of u that kills every vector of degree e.
  [[nodiscard]] ScaledExponent grading_bound(std::size_t u, const ScaledExponent& e) const;
  [[nodiscard]] bool in_lattice(std::size_t u, const ScaledExponent& m) const;

  /// W -> normal forms.
  [[nodiscard]] GradedVector embed(const GradedVector& w) const;
  /// Normal form of y(m)w0 for a homogeneous y in V (rules (a) and (b)).
  [[nodiscard]] GradedVector single(const GradedVector& y, const ScaledExponent& m, std::size_t w0) const;
  /// Normal form of u(p)f for f in the normal form span.
  [[nodiscard]] GradedVector apply_mode(std::size_t u, const ScaledExponent& p, const GradedVector& f) const;
  [[nodiscard]] GradedVector apply_mode(const GradedVector& y, const ScaledExponent& p, const GradedVector& f) const;
  /// Sum_i Sum_j C(p-l,i) C(l,j) (u_{p-l-i+j}v)(q+l+i-j) X for X homogeneous of degree e.
  [[nodiscard]] GradedVector pair_product(std::size_t u, const ScaledExponent& p, std::size_t v,
                                          const ScaledExponent& q, const GradedVector& X,
                                          const ScaledExponent& e) const;

  /// Whether pair_product(u, p, v, q, X, e) needs only iterates under the algebra cutoff.
  [[nodiscard]] bool pair_fits(std::size_t u, const ScaledExponent& p, std::size_t v, const ScaledExponent& q,
                               const ScaledExponent& e) const;

  /// Right-to-left normal form of a word.
  [[nodiscard]] GradedVector reduce_word(const TensorWord& word) const;
  /// Kills the word if any suffix has negative degree, then expands the two
  /// leftmost modes as a pair over the reduced tail.
  [[nodiscard]] GradedVector reduce_word_pair_first(const TensorWord& word) const;

  /// Truncation family at degree d: Sum_j C(l,j)(u_{j+m}v)(N-j-m-2)w for
  /// m <= N-2-l-k and w over the light quotient representatives of every
  /// degree e (weight <= e - base + stability), kept when every iterate stays
  /// under the algebra cutoff.
  [[nodiscard]] std::vector<GradedVector> j_relations(const ScaledExponent& d) const;

  [[nodiscard]] const Quotient& quotient() const { return *quotient_; }
  /// Smallest weight B such that the words u(m)w with wt u <= B span degree d
  /// modulo relations, certified by the next `stability` weights adding no
  /// representatives. Words heavier than that are a cutoff boundary.
  [[nodiscard]] int64_t spanning_weight(const ScaledExponent& d) const { return spanning_.at(d); }
  [[nodiscard]] std::size_t dim_at(const ScaledExponent& d) const { return space_->dim_at(d); }
  /// Dimensions at degrees 0, 1/T, ..., cutoff.
  [[nodiscard]] std::vector<std::size_t> graded_dims() const;
  /// Certified degrees 0..cutoff: representatives are the light quotient basis vectors.
  [[nodiscard]] const SpacePtr& space() const { return space_; }

  /// Tabulated module over the algebra truncated at the action weight, on degrees 0..cutoff.
  [[nodiscard]] const ModuleData& module() const { return *module_; }
  [[nodiscard]] std::shared_ptr<const ModuleData> module_ptr() const { return module_; }
  /// Index in V of basis vector i of the acting algebra.
  [[nodiscard]] std::size_t acting_index(std::size_t i) const { return acting_map_.at(i); }
  /// Module coordinates of a normal form vector; PrecisionError when it
  /// reaches above the cutoff or onto a boundary word.
  [[nodiscard]] GradedVector to_module(const GradedVector& f) const;
  /// Representative normal form of module coordinates.
  [[nodiscard]] GradedVector from_module(const GradedVector& x) const;
  /// Image of W in module coordinates.
  [[nodiscard]] GradedVector embed_module(const GradedVector& w) const { return to_module(embed(w)); }

 private:
  struct Entry {
    bool pure = true;
    std::size_t u = 0;
    ScaledExponent m;
    std::size_t w0 = 0;
  };

  void build_words();
  void build_relations();
  void build_space();
  void build_module();
  bool add_relation(const GradedVector& r, std::vector<GradedVector>& fresh);
  void close_relations(std::vector<GradedVector> fresh);
  [[nodiscard]] std::vector<std::size_t> representatives(const ScaledExponent& e) const;
  [[nodiscard]] std::vector<ScaledExponent> degrees() const;
  [[nodiscard]] bool left_generator(std::size_t u) const;

  AlgebraPtr V_;
  std::shared_ptr<const AModule> W_;
  InductionParams params_;
  Automorphism twist_;
  ScaledExponent base_;
  ScaledExponent step_;
  int64_t stability_ = 1;
  InductionStats stats_;

  SpacePtr words_;
  std::vector<Entry> entries_;
  std::map<std::tuple<std::size_t, ScaledExponent, std::size_t>, std::size_t> word_index_;
  std::vector<std::size_t> base_index_;
  mutable std::map<std::pair<std::size_t, std::size_t>, GradedVector> rho_cache_;
  Subspace relations_;
  std::optional<Quotient> quotient_;

  std::map<ScaledExponent, int64_t> spanning_;
  SpacePtr space_;
  std::vector<std::size_t> acting_map_;
  std::shared_ptr<const ModuleData> module_;
  std::map<std::size_t, std::size_t> to_module_;  // word index -> module index
  std::vector<std::size_t> from_module_;
};

/// Induced module S_n(W) for an A_n-module, or the twisted one for an A_g-module.
InducedModule build_induced(const AlgebraPtr& V, std::shared_ptr<const AModule> W, const InductionParams& params);

}  // namespace vtx
