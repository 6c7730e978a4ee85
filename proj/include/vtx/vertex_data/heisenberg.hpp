#pragma once

#include "vtx/vertex_data/algebra.hpp"
#include "vtx/vertex_data/fock.hpp"

#include <string>

namespace vtx {

/// Rank-one Heisenberg vertex algebra on the basis a(-n1)...a(-nk)1 with
/// n1 >= ... >= nk >= 1 and total weight <= cutoff. Structure constants come
/// from FockOracle; omega = 1/2 a(-1)^2 1. A lazy algebra asks the oracle
/// for each entry on first use instead of tabulating every pair.
TruncatedVertexAlgebra build_heisenberg(int64_t cutoff, bool lazy = false);

/// The automorphism a -> -a: label = number of parts mod 2.
Automorphism heisenberg_parity(const TruncatedVertexAlgebra& V);

/// "1" for the empty partition, otherwise "a(-n1)a(-n2)...1".
std::string heisenberg_label(const FockOracle::State& s);
/// Inverse of heisenberg_label; throws ParseError on other labels.
FockOracle::State heisenberg_state(const std::string& label);

}  // namespace vtx
