#include "vtx/cli/run.hpp"

#include "vtx/vertex_data/heisenberg.hpp"
#include "vtx/vertex_data/spec_io.hpp"

#include <map>
#include <memory>
#include <stdexcept>

namespace vtx {

namespace {

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"check-algebra", Command::CheckAlgebra},           {"zhu", Command::Zhu},
      {"induce", Command::Induce},                        {"verify-thm21", Command::VerifyResidue},
      {"verify-corollaries", Command::VerifyCorollaries}, {"verify-universal", Command::VerifyUniversal}};
  return names;
}

std::string command_name(Command c) {
  for (const auto& [k, v] : command_names())
    if (v == c) return k;
  return "";
}

struct Loaded {
  AlgebraPtr V;
  std::optional<Automorphism> automorphism;
  bool builtin = false;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.algebra.empty()) throw std::invalid_argument("--algebra is required");
  const std::string prefix = "heisenberg:";
  if (cfg.algebra.rfind(prefix, 0) == 0) {
    const int64_t C = std::stoll(cfg.algebra.substr(prefix.size()));
    if (C < 0) throw std::invalid_argument("negative Heisenberg cutoff");
    return {std::make_shared<const TruncatedVertexAlgebra>(build_heisenberg(C, true)), std::nullopt, true};
  }
  AlgebraSpec spec = load_algebra_file(cfg.algebra);
  return {std::make_shared<const TruncatedVertexAlgebra>(std::move(spec.algebra)), spec.automorphism, false};
}

std::optional<Automorphism> twist_of(const RunConfig& cfg, const Loaded& L) {
  if (!cfg.twist) return std::nullopt;
  if (*cfg.twist == "parity") return heisenberg_parity(*L.V);
  if (*cfg.twist == "algebra") {
    if (!L.automorphism) throw std::invalid_argument("the algebra document has no automorphism");
    return L.automorphism;
  }
  throw std::invalid_argument("unknown twist '" + *cfg.twist + "' (use algebra or parity)");
}

ScaledExponent cutoff_of(const RunConfig& cfg) {
  if (!cfg.cutoff) throw std::invalid_argument("--cutoff is required");
  const ScaledExponent D = ScaledExponent::parse(*cfg.cutoff);
  if (D < ScaledExponent(0)) throw std::invalid_argument("negative cutoff");
  return D;
}

ModuleData load_module_data(const RunConfig& cfg, const Loaded& L, const Automorphism& g) {
  if (cfg.module.empty()) throw std::invalid_argument("--module is required");
  if (cfg.module.rfind("fock", 0) == 0) {
    if (!L.builtin) throw std::invalid_argument("built-in Fock modules need the built-in Heisenberg algebra");
    const ScaledExponent D = cutoff_of(cfg);
    if (cfg.module == "fock-twisted") {
      FockOracle F(2, Rational(0));
      return build_fock_module(L.V, heisenberg_parity(*L.V), F, D);
    }
    if (cfg.module.rfind("fock:", 0) != 0) throw std::invalid_argument("unknown module '" + cfg.module + "'");
    FockOracle F(1, Rational::parse(cfg.module.substr(5)));
    return build_fock_module(L.V, Automorphism::identity(L.V->dim()), F, D);
  }
  return load_module_file(cfg.module, L.V, g);
}

ZhuPtr build_quotient(const RunConfig& cfg, const Loaded& L, int64_t cap) {
  if (cfg.level.has_value() == cfg.twist.has_value())
    throw std::invalid_argument("give exactly one of --level and --twist");
  if (cfg.level) {
    if (*cfg.level < 0) throw std::invalid_argument("negative level");
    return std::make_shared<const ZhuQuotient>(build_A_n(L.V, *cfg.level, cap));
  }
  return std::make_shared<const ZhuQuotient>(build_A_g(L.V, *twist_of(cfg, L), cap));
}

Automorphism module_twist(const RunConfig& cfg, const Loaded& L) {
  if (cfg.module == "fock-twisted") return heisenberg_parity(*L.V);
  if (auto g = twist_of(cfg, L)) return *g;
  return Automorphism::identity(L.V->dim());
}

std::string vec_str(const GradedVector& v, const GradedSpace& space) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : v.entries()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + space.label(i);
  }
  return out;
}

template <typename T>
std::string list_str(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

void add_admissibility(Report& r, const AdmissibilityReport& a) {
  r.check("grading-axioms", "admissible grading", a.axioms);
  r.check("vacuum", "vacuum property", a.vacuum);
  r.check("weak-associativity", "weak associativity", a.associativity);
  r.check("residue-formulas", "product/iterate and truncation residues", a.residue);
  r.check("jacobi", "Jacobi identity components", a.jacobi);
}

AdmissibilityOptions options_of(const RunConfig& cfg) {
  AdmissibilityOptions o;
  o.seed = cfg.seed;
  o.exhaustive_limit = cfg.exhaustive_limit;
  return o;
}

void check_algebra(const RunConfig& cfg, Report& r) {
  const Loaded L = load(cfg);
  const TruncatedVertexAlgebra& V = *L.V;
  r.info("cutoff", std::to_string(V.cutoff()));
  std::vector<std::size_t> dims;
  for (int64_t w = 0; w <= V.cutoff(); ++w) dims.push_back(V.space().dim_at(ScaledExponent(w)));
  r.info("weight dims", list_str(dims));
  r.check("vertex-axioms", "vacuum, derivation and Borcherds identities", true);
  // Skew symmetry needs the translation operator from a conformal vector.
  if (V.conformal()) {
    const auto skew = check_skew_symmetry(V);
    r.check("skew-symmetry", "skew symmetry", skew.empty(),
            skew.empty() ? "" : V.space().label(skew.front().u) + " " + V.space().label(skew.front().v));
  }
  if (L.automorphism) {
    std::string what;
    try {
      check_automorphism(V, *L.automorphism);
    } catch (const AxiomError& e) {
      what = e.what();
    }
    r.check("automorphism", "finite order automorphism", what.empty(), what);
  }
}

void zhu(const RunConfig& cfg, Report& r) {
  const Loaded L = load(cfg);
  const int64_t cap = cfg.cutoff ? std::stoll(*cfg.cutoff) : L.V->cutoff();
  const ZhuPtr Q = build_quotient(cfg, L, cap);
  const GradedSpace& space = L.V->space();
  r.info("kind", Q->kind() == ZhuQuotient::Kind::Level ? "level " + std::to_string(Q->level()) : "twisted");
  r.info("weight cap", std::to_string(cap));
  r.info("dim", std::to_string(Q->dim()));
  r.info("filtered dims", list_str(filtered_dims(*Q)));
  r.info("generators", std::to_string(Q->generators().size()));
  std::string what;
  try {
    Q->check_invariants();
  } catch (const AxiomError& e) {
    what = e.what();
  }
  r.check("zhu-invariants", "generators vanish, product well defined, unital, associative", what.empty(), what);
  std::vector<std::string> basis, table;
  for (std::size_t i = 0; i < Q->dim(); ++i) basis.push_back(std::to_string(i) + " " + space.label(Q->representative(i)));
  auto class_str = [&](const GradedVector& q) {
    if (q.is_zero()) return std::string("0");
    std::string out;
    for (const auto& [i, c] : q.entries())
      out += (out.empty() ? "" : " + ") + c.str() + "*[" + space.label(Q->representative(i)) + "]";
    return out;
  };
  for (const auto& [ij, q] : Q->mult_table())
    table.push_back("[" + space.label(Q->representative(ij.first)) + "] * [" +
                    space.label(Q->representative(ij.second)) + "] = " + class_str(q));
  r.table("basis", basis);
  r.table("mult_table", table);
}

struct Induction {
  Loaded L;
  ZhuPtr Q;
  std::optional<ModuleData> M;
  std::optional<OmegaAction> omega;
  std::unique_ptr<InducedModule> S;
};

// Builds W = Omega(M) as a module over the quotient and its induced module;
// returns false (after recording the failure) if Omega is not a module.
bool induce_from(const RunConfig& cfg, Report& r, Induction& I) {
  I.L = load(cfg);
  I.Q = build_quotient(cfg, I.L, I.L.V->cutoff());
  I.M.emplace(load_module_data(cfg, I.L, module_twist(cfg, I.L)));
  std::string what;
  try {
    I.omega.emplace(a_action_on_omega(*I.M, I.Q));
  } catch (const AxiomError& e) {
    what = e.what();
  }
  r.check("omega-module", "lowest levels form a Zhu module", what.empty(), what);
  if (!what.empty()) return false;
  InductionParams p;
  p.cutoff = cutoff_of(cfg);
  p.action_weight = std::min<int64_t>(cfg.action_weight, I.L.V->cutoff());
  I.S = std::make_unique<InducedModule>(I.L.V, std::make_shared<const AModule>(I.omega->module), p);
  r.info("dim W", std::to_string(I.omega->module.dim()));
  r.info("graded dims", list_str(I.S->graded_dims()));
  const InductionStats& st = I.S->stats();
  r.info("relations", "consistency " + std::to_string(st.consistency) + " truncation " +
                          std::to_string(st.truncation) + " closure " + std::to_string(st.closure));
  return true;
}

void induce(const RunConfig& cfg, Report& r) {
  Induction I;
  if (!induce_from(cfg, r, I)) return;
  const InducedModule& S = *I.S;
  add_admissibility(r, check_admissible(S.module(), options_of(cfg)));
  const EmbeddingReport e = check_embedding(S);
  r.check("base-is-W", "base degree spanned by W", e.base_is_w);
  r.check("embedding", "W embeds in the induced module", e.injective, e.witness);
  if (S.twisted()) {
    r.check("negative-N", "twisted elements with N < 0 vanish", e.negative_n);
    r.check("negative-middle", "twisted elements with N < M vanish", e.negative_middle);
    r.check("general", "twisted elements vanish", e.general);
  } else {
    r.check("iterate-sum", "iterate sums on W vanish", e.iterate_sum);
    r.check("mode-iterate-mode", "modes around iterate sums on W vanish", e.mode_iterate_mode);
  }
  std::vector<std::string> basis, actions;
  const ModuleData& M = S.module();
  for (std::size_t b = 0; b < M.space().dim(); ++b)
    basis.push_back(M.degree(b).str() + " " + M.space().label(b));
  for (const auto& [key, value] : M.action_table()) {
    const auto& [u, n, w] = key;
    actions.push_back(M.algebra().space().label(u) + "_" + n.str() + " " + M.space().label(w) + " = " +
                      vec_str(value, M.space()));
  }
  r.table("basis", basis);
  r.table("actions", actions);
}

void verify_residue(const RunConfig& cfg, Report& r) {
  const Loaded L = load(cfg);
  const ModuleData M = load_module_data(cfg, L, module_twist(cfg, L));
  r.info("module dim", std::to_string(M.space().dim()));
  add_admissibility(r, check_admissible(M, options_of(cfg)));
}

void verify_corollaries(const RunConfig& cfg, Report& r) {
  const Loaded L = load(cfg);
  const int64_t cap = L.V->cutoff();
  const ZhuPtr Q = build_quotient(cfg, L, cap);
  const ModuleData M = load_module_data(cfg, L, module_twist(cfg, L));
  const Subspace omega = omega_n(M, cfg.level.value_or(0));
  r.info("dim Omega", std::to_string(omega.rank()));
  r.info("generators", std::to_string(Q->generators().size()));
  CheckCount c;
  for (std::size_t k = 0; k < Q->generators().size(); ++k)
    for (const GradedVector& w : omega.basis()) {
      const std::string what = "generator " + std::to_string(k) + " on " + vec_str(w, M.space());
      try {
        c.record(o_action(M, Q->generators()[k], w).is_zero() ? CheckTag::Pass : CheckTag::Fail, what);
      } catch (const PrecisionError&) {
        c.record(CheckTag::Uncertified, what);
      }
    }
  r.check("generator-annihilation", "o(O) annihilates the lowest levels", c);
  std::string what;
  try {
    (void)a_action_on_omega(M, Q);
  } catch (const AxiomError& e) {
    what = e.what();
  }
  r.check("omega-module", "lowest levels form a Zhu module", what.empty(), what);
}

void verify_universal(const RunConfig& cfg, Report& r) {
  Induction I;
  if (!induce_from(cfg, r, I)) return;
  const UniversalReport u = universal_map(*I.S, *I.M, I.omega->basis);
  r.check("omega-map", "f lands in Omega and intertwines the Zhu actions", u.omega_map, u.witness);
  r.check("relations", "relations map to zero", u.relations);
  r.check("intertwining", "extension intertwines the modes", u.intertwining);
  r.check("determined", "extension determined on normal forms", u.determined, u.witness);
  r.check("restricts", "extension restricts to f on W", u.restricts, u.witness);
  r.info("isomorphism", u.isomorphism ? "yes" : "no");
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  const auto it = command_names().find(name);
  if (it == command_names().end()) return std::nullopt;
  return it->second;
}

RunResult run(const RunConfig& cfg) {
  Report r(command_name(cfg.command));
  try {
    switch (cfg.command) {
      case Command::CheckAlgebra: check_algebra(cfg, r); break;
      case Command::Zhu: zhu(cfg, r); break;
      case Command::Induce: induce(cfg, r); break;
      case Command::VerifyResidue: verify_residue(cfg, r); break;
      case Command::VerifyCorollaries: verify_corollaries(cfg, r); break;
      case Command::VerifyUniversal: verify_universal(cfg, r); break;
    }
  } catch (const ParseError& e) {
    return {2, std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  } catch (const PrecisionError& e) {
    return {3, std::string("precision abort: ") + e.what() + "\n"};
  } catch (const AxiomError& e) {
    r.check("axioms", "input satisfies the axioms", false, e.what());
  }
  const std::string out = cfg.structured ? r.structured() : r.text(cfg.tables);
  return {r.failed() ? 1 : 0, out};
}

}  // namespace vtx
