#include "doctest.h"

#include "vtx/residue_identities/identities.hpp"
#include "vtx/vertex_data/heisenberg.hpp"
#include "vtx/vertex_data/spec_io.hpp"
#include "vtx/zhu/lowest_weight.hpp"

#include "oracles.hpp"

#include <optional>

using namespace vtx;
using oracle::level_oracle;
using oracle::parity_oracle;

namespace {

ScaledExponent e(int64_t n, int64_t t = 1) { return ScaledExponent(n, t); }

AlgebraPtr heisenberg(int64_t cutoff) { return std::make_shared<TruncatedVertexAlgebra>(build_heisenberg(cutoff)); }

template <class F>
auto certified(F f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const PrecisionError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("vacuum-only algebra has a one-dimensional Zhu quotient") {
  auto V = std::make_shared<TruncatedVertexAlgebra>(load_algebra_file(VTX_DATA_DIR "/vacuum_only.alg").algebra);
  for (int64_t n = 0; n <= 1; ++n) {
    const ZhuQuotient Q = build_A_n(V, n, 0);
    CHECK(Q.dim() == 1);
    CHECK(Q.generators().empty());
    CHECK(Q.unit() == GradedVector::basis(0));
    if (n == 0) CHECK(Q.mult_table().at({0, 0}) == GradedVector::basis(0));
  }
}

TEST_CASE("generator and product examples") {
  auto V = heisenberg(5);
  const std::size_t vac = V->space().find("1");
  for (int64_t n = 0; n <= 1; ++n) {
    for (std::size_t v = 0; v < V->dim(); ++v)
      if (V->weight(v) + 2 * n + 1 <= 5) CHECK(binomial_iterate(*V, e(n), vac, -2 * n - 2, v).is_zero());
    const ZhuQuotient Q = build_A_n(V, n, 5);
    for (std::size_t u = 0; u < V->dim(); ++u) {
      if (V->weight(u) + 2 * n + 1 > 5) continue;
      GradedVector expect = V->mode(u, -2, vac);
      expect.add(u, Rational(V->weight(u)));
      if (n == 0) CHECK(binomial_iterate(*V, e(V->weight(u)), u, -2, vac) == expect);
      for (std::size_t v = 0; v < V->dim(); ++v)
        if (V->weight(v) + 2 * n <= 5) CHECK(mult_n(*V, n, vac, v) == GradedVector::basis(v));
      if (V->weight(u) + 2 * n <= 5) {
        GradedVector diff = mult_n(*V, n, u, vac);
        diff.add(u, Rational(-1));
        CHECK(Q.in_span(diff));
      }
    }
  }
}

TEST_CASE("level zero quotient of the Heisenberg algebra") {
  auto V = heisenberg(6);
  std::vector<std::vector<std::size_t>> dims;
  for (int64_t cap = 3; cap <= 6; ++cap) {
    const ZhuQuotient Q = build_A_n(V, 0, cap);
    const auto got = filtered_dims(Q);
    CHECK(got == level_oracle(0, cap));
    dims.push_back(got);
    for (const auto& [ij, prod] : Q.mult_table()) CHECK(prod == Q.mult_table().at({ij.second, ij.first}));
  }
  const ZhuQuotient Q4 = build_A_n(V, 0, 4), Q5 = build_A_n(V, 0, 5);
  CHECK(stable_weight(Q4, Q5) == 4);
  // Powers of the weight-one class are independent: a polynomial algebra.
  const ZhuQuotient Q = build_A_n(V, 0, 5);
  const GradedVector x = Q.project(GradedVector::basis(V->space().find("a(-1)1")));
  Subspace powers(Q.quotient().space_ptr());
  GradedVector p = Q.unit();
  for (int k = 0; k <= 5; ++k) {
    CHECK(powers.insert(p));
    if (k < 5) p = Q.multiply(p, x);
  }
  CHECK(powers.rank() == Q.dim());
}

TEST_CASE("level one quotient") {
  auto V = heisenberg(6);
  for (int64_t cap = 3; cap <= 6; ++cap) CHECK(filtered_dims(build_A_n(V, 1, cap)) == level_oracle(1, cap));
  // Without the conformal family the vacuum is not a right unit at level one.
  const std::size_t a = V->space().find("a(-1)1"), vac = V->space().find("1");
  const ZhuQuotient bare(V, ZhuQuotient::Kind::Level, 1, Automorphism::identity(V->dim()), 6, o_n_generators(*V, 1, 6));
  GradedVector diff = mult_n(*V, 1, a, vac);
  diff.add(a, Rational(-1));
  CHECK(!bare.in_span(diff));
  CHECK_THROWS_AS(bare.check_invariants(), AxiomError);
  CHECK(build_A_n(V, 1, 6).in_span(diff));
}

TEST_CASE("membership sweeps, level n") {
  auto V = heisenberg(6);
  for (int64_t n = 0; n <= 1; ++n) {
    const ZhuQuotient Q = build_A_n(V, n, 6);
    int checked = 0;
    for (std::size_t u = 0; u < V->dim(); ++u)
      for (std::size_t v = 0; v < V->dim(); ++v)
        for (int64_t m = 0; m <= 4; ++m)
          for (int64_t k = 0; k <= m; ++k)
            if (const auto ok = certified([&] { return extended_membership_n(Q, u, v, m, k); })) {
              CHECK_MESSAGE(*ok, V->space().label(u) << " " << V->space().label(v) << " m=" << m << " k=" << k);
              ++checked;
            }
    CHECK(checked > 20);
  }
  const ZhuQuotient Q = build_A_n(V, 0, 6);
  CHECK_THROWS_AS((void)extended_membership_n(Q, 0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("twisted quotient under parity") {
  auto V = heisenberg(6);
  const Automorphism g = heisenberg_parity(*V);
  for (int64_t cap = 3; cap <= 6; ++cap) {
    const ZhuQuotient Q = build_A_g(V, g, cap);
    CHECK(filtered_dims(Q) == parity_oracle(cap));
    for (std::size_t u = 0; u < V->dim(); ++u)
      if (g.label(u) != 0 && V->weight(u) <= cap) CHECK(Q.project(GradedVector::basis(u)).is_zero());
    CHECK(Q.unit() == Q.project(V->vacuum()));
  }
  const ZhuQuotient Q = build_A_g(V, g, 6);
  int checked = 0;
  for (std::size_t u = 0; u < V->dim(); ++u)
    for (std::size_t v = 0; v < V->dim(); ++v)
      for (int64_t m = 0; m <= 4; ++m)
        for (int64_t k = 0; k <= m; ++k)
          if (const auto ok = certified([&] { return extended_membership_g(Q, u, v, m, k); })) {
            CHECK(*ok);
            ++checked;
          }
  CHECK(checked > 20);
  for (std::size_t u = 0; u < V->dim(); ++u)
    if (g.label(u) != 0)
      for (std::size_t v = 0; v < V->dim(); ++v) CHECK(mult_g(*V, g, u, v).is_zero());
}

TEST_CASE("identity twist reproduces level zero") {
  auto V = heisenberg(5);
  const Automorphism id = Automorphism::identity(V->dim());
  CHECK(o_g_generators(*V, id, 5) == o_n_generators(*V, 0, 5));
  for (std::size_t u = 0; u < V->dim(); ++u)
    for (std::size_t v = 0; v < V->dim(); ++v)
      if (V->weight(u) + V->weight(v) <= 5) CHECK(mult_g(*V, id, u, v) == mult_n(*V, 0, u, v));
  const ZhuQuotient A = build_A_g(V, id, 5), B = build_A_n(V, 0, 5);
  CHECK(filtered_dims(A) == filtered_dims(B));
  CHECK(A.mult_table() == B.mult_table());
}

TEST_CASE("lowest weight spaces") {
  auto V = heisenberg(4);
  FockOracle F(1, Rational(2));
  const ModuleData M = build_fock_module(V, Automorphism::identity(V->dim()), F, e(3));
  const std::size_t w0 = M.space().find("|2>");
  const Subspace O0 = omega_n(M, 0);
  CHECK(O0.rank() == 1);
  CHECK(O0.contains(GradedVector::basis(w0)));
  for (int64_t n = 1; n <= 3; ++n) {
    const Subspace On = omega_n(M, n);
    for (const auto& b : omega_n(M, n - 1).basis()) CHECK(On.contains(b));
    std::size_t expect = 0;
    for (int64_t d = 0; d <= n; ++d) expect += M.space().dim_at(e(d));
    CHECK(On.rank() == expect);
  }
  const ModuleData flat = build_fock_module(V, Automorphism::identity(V->dim()), F, e(0));
  CHECK(omega_n(flat, 0).rank() == flat.space().dim());

  const Automorphism g = heisenberg_parity(*V);
  FockOracle T(2, Rational(0));
  const ModuleData tw = build_fock_module(V, g, T, e(5, 2));
  const Subspace Ot = omega_n(tw, 0);
  CHECK(Ot.rank() == 1);
  CHECK(Ot.contains(GradedVector::basis(tw.space().find("|tw>"))));
}

TEST_CASE("Zhu action on lowest weight spaces") {
  auto V = heisenberg(4);
  const std::size_t a = V->space().find("a(-1)1");
  FockOracle F(1, Rational(2));
  const ModuleData M = build_fock_module(V, Automorphism::identity(V->dim()), F, e(3));
  auto Q0 = std::make_shared<const ZhuQuotient>(build_A_n(V, 0, 4));
  const OmegaAction A = a_action_on_omega(M, Q0);
  REQUIRE(A.module.dim() == 1);
  CHECK(A.module.act(V->vacuum(), GradedVector::basis(0)) == GradedVector::basis(0));
  CHECK(A.module.act(GradedVector::basis(a), GradedVector::basis(0)) == GradedVector::basis(0, Rational(2)));
  A.module.check_module();

  auto Q1 = std::make_shared<const ZhuQuotient>(build_A_n(V, 1, 4));
  const OmegaAction A1 = a_action_on_omega(M, Q1);
  CHECK(A1.module.dim() == 2);
  // o(a) is the zero mode of a, which acts as the momentum on every Fock state.
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(A1.module.act(GradedVector::basis(a), GradedVector::basis(j)) == GradedVector::basis(j, Rational(2)));

  const Automorphism g = heisenberg_parity(*V);
  FockOracle T(2, Rational(0));
  const ModuleData tw = build_fock_module(V, g, T, e(5, 2));
  auto Qg = std::make_shared<const ZhuQuotient>(build_A_g(V, g, 4));
  const OmegaAction At = a_action_on_omega(tw, Qg);
  REQUIRE(At.module.dim() == 1);
  const GradedVector omega = *V->conformal();
  CHECK(At.module.act(omega, GradedVector::basis(0)) == GradedVector::basis(0, Rational(1, 16)));
}

TEST_CASE("well-definedness agrees with the annihilation checks") {
  auto V = heisenberg(4);
  const std::size_t a = V->space().find("a(-1)1");
  FockOracle F(1, Rational(2));
  ModuleData M = build_fock_module(V, Automorphism::identity(V->dim()), F, e(3));
  auto Q = std::make_shared<const ZhuQuotient>(build_A_n(V, 0, 4));
  auto all_annihilate = [&](const ModuleData& X) {
    const GradedVector w0 = GradedVector::basis(X.space().find("|2>"));
    for (std::size_t u = 0; u < V->dim(); ++u)
      for (std::size_t v = 0; v < V->dim(); ++v)
        if (V->weight(u) + V->weight(v) + 1 <= 4 && !corollary_annihilation_n(X, u, v, w0, 0, -2)) return false;
    return true;
  };
  CHECK(all_annihilate(M));
  CHECK_NOTHROW(a_action_on_omega(M, Q));
  const std::size_t w0 = M.space().find("|2>");
  M.perturb(a, e(0), w0, w0, Rational(1));
  CHECK(!all_annihilate(M));
  CHECK_THROWS_AS(a_action_on_omega(M, Q), AxiomError);
}
