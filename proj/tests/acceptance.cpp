// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include "vtx/cli/run.hpp"
#include "vtx/vertex_data/heisenberg.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace vtx;

namespace {

ScaledExponent e(int64_t n, int64_t t = 1) { return ScaledExponent(n, t); }

AlgebraPtr heisenberg(int64_t cutoff, bool lazy = false) {
  return std::make_shared<const TruncatedVertexAlgebra>(build_heisenberg(cutoff, lazy));
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "FAILED: " << what << "; ";
    pass = pass && ok;
  }
};

struct Induced {
  AlgebraPtr V;
  Automorphism g;
  ZhuPtr Q;
  std::unique_ptr<FockOracle> F;
  std::unique_ptr<ModuleData> M;
  std::unique_ptr<OmegaAction> omega;
  std::unique_ptr<InducedModule> S;
};

Induced induce(int64_t C, const ScaledExponent& D, bool twisted) {
  Induced I;
  I.V = heisenberg(C, true);
  I.g = twisted ? heisenberg_parity(*I.V) : Automorphism::identity(I.V->dim());
  I.Q = std::make_shared<const ZhuQuotient>(twisted ? build_A_g(I.V, I.g, C) : build_A_n(I.V, 0, C));
  I.F = std::make_unique<FockOracle>(twisted ? 2 : 1, twisted ? Rational(0) : Rational(3, 2));
  I.M = std::make_unique<ModuleData>(build_fock_module(I.V, I.g, *I.F, D));
  I.omega = std::make_unique<OmegaAction>(a_action_on_omega(*I.M, I.Q));
  InductionParams p;
  p.cutoff = D;
  p.action_weight = 2;
  I.S = std::make_unique<InducedModule>(I.V, std::make_shared<const AModule>(I.omega->module), p);
  return I;
}

const Induced& untwisted() {
  static const Induced I = induce(12, e(4), false);
  return I;
}

const Induced& twisted() {
  static const Induced I = induce(10, e(5, 2), true);
  return I;
}

void count(Outcome& o, const char* name, const CheckCount& c) {
  o.detail << name << " " << c.pass << "/" << c.fail << "/" << c.uncertified << " ";
  o.require(c.fail == 0 && c.pass > 0, std::string(name) + ": " + c.witness);
}

// The D = 4 Fock module over an algebra deep enough for the iterates of
// weight <= 4 pairs; triples use u, v of weight <= 4.
ModuleData fock4() {
  static const AlgebraPtr V = heisenberg(9, true);
  FockOracle F(1, Rational(1));
  return build_fock_module(V, Automorphism::identity(V->dim()), F, e(4));
}

void residue_forward(Outcome& o) {
  const ModuleData M = fock4();
  const TruncatedVertexAlgebra& V = M.algebra();
  std::size_t coeffs = 0, products = 0, truncations = 0, uncertified = 0;
  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v)
      for (std::size_t w = 0; w < M.space().dim(); ++w) {
        if (V.weight(u) > 4 || V.weight(v) > 4) continue;
        try {
          const AssocResult a = check_weak_associativity(M, u, v, w, grading_bound(M, u, w), default_window(M, u, v));
          o.require(a.pass, "weak associativity");
          coeffs += a.checked;
        } catch (const PrecisionError&) {
          ++uncertified;
        }
        const ResidueSweep s = sweep_residue_formulas(M, u, v, w);
        o.require(s.pass, s.witness);
        products += s.product_checks;
        truncations += s.truncation_checks;
        uncertified += s.uncertified;
      }
  o.require(coeffs > 0 && products > 0 && truncations > 0, "nonempty windows");
  o.detail << "associativity coefficients " << coeffs << ", product/iterate " << products << ", truncation "
           << truncations << ", uncertified " << uncertified;
}

void residue_converse(Outcome& o) {
  ModuleData M = fock4();
  const std::size_t a = M.algebra().space().find("a(-1)1");
  const std::size_t w0 = M.space().find("|1>");
  M.perturb(a, e(-1), w0, M.space().find("a(-1)|1>"), Rational(1));
  bool residue_fails = false, assoc_fails = false;
  std::string witness;
  for (std::size_t u = 0; u < M.algebra().dim(); ++u)
    for (std::size_t v = 0; v < M.algebra().dim(); ++v) {
      if (M.algebra().weight(u) > 4 || M.algebra().weight(v) > 4) continue;
      const ResidueSweep s = sweep_residue_formulas(M, u, v, w0);
      if (!s.pass && !residue_fails) witness = s.witness;
      residue_fails = residue_fails || !s.pass;
      try {
        assoc_fails = assoc_fails ||
                      !check_weak_associativity(M, u, v, w0, grading_bound(M, u, w0), default_window(M, u, v)).pass;
      } catch (const PrecisionError&) {
      }
    }
  o.require(residue_fails, "no residue failure");
  o.require(assoc_fails, "no associativity failure");
  o.detail << "witness: " << witness;
}

// o(x) of every generator kills the lowest levels.
std::size_t annihilation(Outcome& o, const ZhuQuotient& Q, const ModuleData& M) {
  const Subspace omega = omega_n(M, Q.kind() == ZhuQuotient::Kind::Level ? Q.level() : 0);
  std::size_t checked = 0;
  for (const GradedVector& x : Q.generators())
    for (const GradedVector& w : omega.basis()) {
      o.require(o_action(M, x, w).is_zero(), "generator survives on Omega");
      ++checked;
    }
  o.require(checked == Q.generators().size() * omega.rank() && checked > 0, "every generator checked");
  return checked;
}

void corollaries(Outcome& o) {
  const AlgebraPtr V4 = heisenberg(4);
  FockOracle F(1, Rational(2));
  const ModuleData M = build_fock_module(V4, Automorphism::identity(V4->dim()), F, e(3));
  const std::size_t n0 = annihilation(o, build_A_n(V4, 0, 4), M);
  const AlgebraPtr V3 = heisenberg(3);
  const Automorphism g = heisenberg_parity(*V3);
  FockOracle T(2, Rational(0));
  const ModuleData MT = build_fock_module(V3, g, T, e(5, 2));
  const std::size_t ng = annihilation(o, build_A_g(V3, g, 3), MT);
  o.detail << "level zero " << n0 << " generator/vector pairs, twisted " << ng;
}

void membership(Outcome& o) {
  const AlgebraPtr V = heisenberg(6);
  std::size_t counts[3] = {0, 0, 0};
  const ZhuQuotient Q0 = build_A_n(V, 0, 6), Q1 = build_A_n(V, 1, 6);
  const ZhuQuotient QG = build_A_g(V, heisenberg_parity(*V), 6);
  for (std::size_t u = 0; u < V->dim(); ++u)
    for (std::size_t v = 0; v < V->dim(); ++v)
      for (int64_t m = 0; m <= 4; ++m)
        for (int64_t k = 0; k <= m; ++k) {
          const std::function<bool()> tests[3] = {[&] { return extended_membership_n(Q0, u, v, m, k); },
                                                  [&] { return extended_membership_n(Q1, u, v, m, k); },
                                                  [&] { return extended_membership_g(QG, u, v, m, k); }};
          for (int t = 0; t < 3; ++t) try {
              o.require(tests[t](), "extended element outside the span: " + V->space().label(u) + " " +
                                        V->space().label(v) + " m=" + std::to_string(m) + " k=" + std::to_string(k));
              ++counts[t];
            } catch (const PrecisionError&) {
            }
        }
  o.require(counts[0] > 0 && counts[1] > 0 && counts[2] > 0, "nonempty sweeps");
  o.detail << "certified memberships: level 0 " << counts[0] << ", level 1 " << counts[1] << ", twisted "
           << counts[2];
}

void level_zero_dims(Outcome& o) {
  const AlgebraPtr V = heisenberg(6);
  std::vector<ZhuQuotient> Qs;
  for (int64_t cap = 3; cap <= 6; ++cap) Qs.push_back(build_A_n(V, 0, cap));
  std::size_t triples = 0;
  for (int64_t cap = 3; cap <= 5; ++cap) {
    const ZhuQuotient& Q = Qs[cap - 3];
    const auto dims = filtered_dims(Q);
    o.require(dims == oracle::level_oracle(0, cap), "filtered dims differ from the span oracle at cap " +
                                                       std::to_string(cap));
    o.require(stable_weight(Q, Qs[cap - 2]) >= cap, "not stable at cap " + std::to_string(cap));
    o.detail << "cap " << cap << " dims";
    for (auto d : dims) o.detail << " " << d;
    o.detail << "; ";
    const GradedVector one = Q.unit();
    for (std::size_t i = 0; i < Q.dim(); ++i) {
      const GradedVector x = GradedVector::basis(i);
      o.require(Q.multiply(one, x) == x && Q.multiply(x, one) == x, "unit");
      for (std::size_t j = 0; j < Q.dim(); ++j) {
        const GradedVector y = GradedVector::basis(j);
        try {
          o.require(Q.multiply(x, y) == Q.multiply(y, x), "commutativity");
        } catch (const PrecisionError&) {
          continue;
        }
        for (std::size_t k = 0; k < Q.dim(); ++k) {
          const GradedVector z = GradedVector::basis(k);
          try {
            o.require(Q.multiply(Q.multiply(x, y), z) == Q.multiply(x, Q.multiply(y, z)), "associativity");
            ++triples;
          } catch (const PrecisionError&) {
          }
        }
      }
    }
  }
  o.require(triples > 0, "no in-cap triples");
  o.detail << "associative triples " << triples;
}

void identity_twist(Outcome& o) {
  const AlgebraPtr V = heisenberg(10, true);
  const Automorphism id = Automorphism::identity(V->dim());
  auto A = std::make_shared<const ZhuQuotient>(build_A_g(V, id, 10));
  auto B = std::make_shared<const ZhuQuotient>(build_A_n(V, 0, 10));
  o.require(filtered_dims(*A) == filtered_dims(*B), "quotient dims");
  o.require(A->mult_table() == B->mult_table(), "mult_table");
  FockOracle F(1, Rational(3, 2));
  const ModuleData M = build_fock_module(V, id, F, e(3));
  InductionParams p;
  p.cutoff = e(3);
  const InducedModule SA(V, std::make_shared<const AModule>(a_action_on_omega(M, A).module), p);
  const InducedModule SB(V, std::make_shared<const AModule>(a_action_on_omega(M, B).module), p);
  o.require(SA.twisted() && !SB.twisted(), "constructions differ in kind");
  o.require(SA.graded_dims() == SB.graded_dims(), "graded dims");
  o.require(SA.module().space() == SB.module().space(), "module bases");
  o.require(SA.module().action_table() == SB.module().action_table(), "action tables");
  o.detail << "quotient dim " << A->dim() << ", " << SA.module().action_table().size() << " identical action entries";
}

void admissible(Outcome& o) {
  for (const Induced* I : {&untwisted(), &twisted()}) {
    const AdmissibilityReport r = check_admissible(I->S->module());
    o.detail << (I->S->twisted() ? "twisted: " : "level zero: ");
    count(o, "axioms", r.axioms);
    count(o, "vacuum", r.vacuum);
    count(o, "associativity", r.associativity);
    count(o, "residue", r.residue);
    count(o, "jacobi", r.jacobi);
    o.require(r.jacobi.pass + r.jacobi.fail >= 200, "fewer than 200 Jacobi tuples");
    o.detail << "; ";
  }
}

void embedding(Outcome& o) {
  for (const Induced* I : {&untwisted(), &twisted()}) {
    const EmbeddingReport r = check_embedding(*I->S);
    o.require(r.base_is_w && r.injective, "base degree is not W: " + r.witness);
    o.require(I->S->dim_at(I->S->base_degree()) == I->omega->module.dim(), "base dimension");
    if (I->S->twisted()) {
      o.detail << "twisted: ";
      count(o, "N<0", r.negative_n);
      count(o, "N<M", r.negative_middle);
      count(o, "general", r.general);
    } else {
      o.detail << "level zero: ";
      count(o, "iterate-sum", r.iterate_sum);
      count(o, "mode-iterate-mode", r.mode_iterate_mode);
    }
    o.detail << "; ";
  }
}

void fock_agreement(Outcome& o) {
  for (const Induced* I : {&untwisted(), &twisted()}) {
    const bool tw = I->S->twisted();
    const auto dims = I->S->graded_dims();
    for (std::size_t k = 0; k < dims.size(); ++k)
      o.require(static_cast<int64_t>(dims[k]) == oracle::partitions(static_cast<int64_t>(k), tw), "partition count");
    o.require(dims.size() == (tw ? 6u : 5u), "degree range");
    const UniversalReport u = universal_map(*I->S, *I->M, I->omega->basis);
    o.require(u.ok(), "universal map: " + u.witness);
    o.require(u.isomorphism, "not bijective");
    o.detail << (tw ? "twisted dims" : "level zero dims");
    for (auto d : dims) o.detail << " " << d;
    o.detail << ", intertwining " << u.intertwining.pass << "; ";
  }
}

void determinism(Outcome& o) {
  RunConfig a;
  a.command = Command::VerifyUniversal;
  a.algebra = "heisenberg:10";
  a.module = "fock-twisted";
  a.twist = "parity";
  a.cutoff = "2";
  a.structured = true;
  RunConfig b;
  b.command = Command::Induce;
  b.algebra = "heisenberg:10";
  b.module = "fock:3/2";
  b.level = 0;
  b.cutoff = "3";
  b.structured = true;
  for (const RunConfig* c : {&a, &b}) {
    const RunResult x = run(*c), y = run(*c);
    o.require(x.status == 0 && x.output == y.output, "reports differ between runs");
  }
  for (const Induced* I : {&untwisted(), &twisted()}) {
    const CheckCount c = check_confluence(*I->S, 2);
    o.detail << (I->S->twisted() ? "twisted " : "level zero ");
    count(o, "confluence", c);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*fn)(Outcome&);
  };
  const Criterion criteria[] = {
      {"weak associativity and residue formulas hold on the D=4 Fock module", residue_forward},
      {"a perturbed constant breaks the residue formulas and weak associativity", residue_converse},
      {"Zhu generators annihilate the lowest levels (level zero and twisted)", corollaries},
      {"extended elements lie in the generator span", membership},
      {"level-zero Zhu dims match the span oracle and the product is a commutative unital algebra", level_zero_dims},
      {"identity twist reproduces the level-zero quotient and induced module", identity_twist},
      {"induced modules pass the admissibility suite", admissible},
      {"W embeds and the embedding families vanish", embedding},
      {"induced modules match partition counts and map isomorphically onto the Fock modules", fock_agreement},
      {"reports are deterministic and rewriting is confluent modulo relations", determinism},
  };
  bool all = true;
  int k = 0;
  for (const Criterion& c : criteria) {
    ++k;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.fn(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << "criterion " << k << " [PRIMARY] " << (o.pass ? "PASS" : "FAIL") << ": " << c.name << " ("
              << o.detail.str() << "; " << static_cast<int>(secs * 10) / 10.0 << "s)" << std::endl;
  }
  return all ? 0 : 1;
}
