#pragma once

#include "vtx/exact_core/rational.hpp"
#include "vtx/exact_core/scaled_exponent.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace vtx {

/// Mode algebra of one free boson acting on a Fock space, used as an
/// independent source of truth for structure constants and module actions.
///
/// With order 1 the modes alpha(m), m in Z, satisfy [alpha(m), alpha(j)] =
/// m delta_{m+j,0} and alpha(0) acts by `momentum`. With order 2 the modes are
/// alpha(m), m in 1/2 + Z (the module twisted by alpha -> -alpha).
///
/// A state is a partition: the list of part numerators k (each part stands
/// for alpha(-k/T)), sorted in descending order. Vertex operator modes of
/// algebra states are computed by recursion on the first part using the
/// Borcherds identity with a = alpha(-1)1, and memoized.
class FockOracle {
 public:
  using State = std::vector<int64_t>;
  using Vec = std::map<State, Rational>;

  FockOracle(int64_t order, Rational momentum);

  [[nodiscard]] int64_t order() const { return order_; }
  [[nodiscard]] const Rational& momentum() const { return momentum_; }
  [[nodiscard]] ScaledExponent degree(const State& s) const;

  /// alpha(m) applied to a basis state.
  [[nodiscard]] Vec alpha(const ScaledExponent& m, const State& s) const;
  [[nodiscard]] Vec alpha(const ScaledExponent& m, const Vec& w) const;

  /// u_Q w where u is a state of the untwisted algebra (integer parts).
  Vec field_mode(const State& u, const ScaledExponent& Q, const State& w);
  Vec field_mode(const State& u, const ScaledExponent& Q, const Vec& w);

  /// All partitions of total degree d (d in (1/T)Z) with parts allowed by the order.
  [[nodiscard]] std::vector<State> states_of_degree(const ScaledExponent& d) const;

 private:
  Vec compute(const State& u, const ScaledExponent& Q, const State& w);

  int64_t order_;
  Rational momentum_;
  std::map<std::tuple<State, ScaledExponent, State>, Vec> memo_;
};

/// alpha(j) acting inside the untwisted algebra (momentum zero), j in Z.
FockOracle::Vec algebra_alpha(int64_t j, const FockOracle::State& s);

/// Number of partitions of n (parts >= 1).
int64_t partition_count(int64_t n);

}  // namespace vtx
