#include "vtx/induction/universal.hpp"

#include "vtx/exact_core/binomial.hpp"
#include "vtx/exact_core/errors.hpp"

#include <random>
#include <stdexcept>

namespace vtx {

namespace {

ScaledExponent wt(const TruncatedVertexAlgebra& V, std::size_t u) { return ScaledExponent(V.weight(u)); }

GradedVector apply_map(const LinearMap& f, const GradedVector& x) {
  GradedVector out;
  for (const auto& [j, c] : x.entries()) out.add_scaled(f.at(j), c);
  return out;
}

std::vector<std::size_t> light_basis(const TruncatedVertexAlgebra& V, int64_t weight) {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < V.dim(); ++u)
    if (V.weight(u) <= weight) out.push_back(u);
  return out;
}

// sum_j C(e, j) (u_{j+m} v)(K - j) f on normal forms.
GradedVector iterate_sum(const InducedModule& S, const ScaledExponent& e, std::size_t u, std::size_t v, int64_t m,
                         const ScaledExponent& K, const GradedVector& f) {
  const TruncatedVertexAlgebra& V = S.algebra();
  GradedVector out;
  for (int64_t j = 0; j + m < V.weight(u) + V.weight(v); ++j) {
    const Rational c = binomial_coefficient(e, j);
    if (c.is_zero()) continue;
    const GradedVector y = V.mode(u, j + m, v);
    if (!y.is_zero()) out.add_scaled(S.apply_mode(y, K - ScaledExponent(j), f), c);
  }
  return out;
}

std::string element_label(const TruncatedVertexAlgebra& V, std::size_t a, std::size_t u, std::size_t v,
                          std::size_t b, const ScaledExponent& M, const ScaledExponent& N, int64_t m, std::size_t w) {
  const auto& s = V.space();
  return "a=" + s.label(a) + " u=" + s.label(u) + " v=" + s.label(v) + " b=" + s.label(b) + " M=" + M.str() +
         " N=" + N.str() + " m=" + std::to_string(m) + " w=" + std::to_string(w);
}

// Least point of shift + Z that is >= x.
ScaledExponent on_lattice(const ScaledExponent& x, const ScaledExponent& shift) {
  return ScaledExponent((x - shift).ceil()) + shift;
}

// Zero in the module, or Uncertified when the value leaves the tabulated window.
CheckTag zero_in_module(const InducedModule& S, const GradedVector& f) {
  try {
    return S.to_module(f).is_zero() ? CheckTag::Pass : CheckTag::Fail;
  } catch (const PrecisionError&) {
    return CheckTag::Uncertified;
  }
}

}  // namespace

void CheckCount::record(CheckTag tag, const std::string& what) {
  switch (tag) {
    case CheckTag::Pass: ++pass; break;
    case CheckTag::Vacuous: ++vacuous; break;
    case CheckTag::Uncertified: ++uncertified; break;
    case CheckTag::Fail:
      if (fail++ == 0) witness = what;
      break;
  }
}

AdmissibilityReport check_admissible(const ModuleData& M, const AdmissibilityOptions& options) {
  const TruncatedVertexAlgebra& V = M.algebra();
  const GradedSpace& W = M.space();
  AdmissibilityReport rep;
  try {
    M.check_axioms();
    rep.axioms.record(CheckTag::Pass, "");
  } catch (const AxiomError& e) {
    rep.axioms.record(CheckTag::Fail, e.what());
  }

  const std::size_t vac = V.vacuum().entries().begin()->first;
  for (std::size_t w = 0; w < W.dim(); ++w) {
    const ScaledExponent top = M.degree(w) - ScaledExponent(1);
    for (ScaledExponent n = M.lattice_ceil(vac, top - M.cutoff()); n <= top; n += ScaledExponent(1)) {
      const GradedVector want = n == ScaledExponent(-1) ? GradedVector::basis(w) : GradedVector{};
      rep.vacuum.record(M.act(vac, n, w) == want ? CheckTag::Pass : CheckTag::Fail,
                        "1_" + n.str() + " on " + W.label(w));
    }
  }

  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v)
      for (std::size_t w = 0; w < W.dim(); ++w) {
        const std::string what = "u=" + V.space().label(u) + " v=" + V.space().label(v) + " w=" + W.label(w);
        try {
          const AssocResult r = check_weak_associativity(M, u, v, w, grading_bound(M, u, w), default_window(M, u, v));
          rep.associativity.record(r.pass ? CheckTag::Pass : CheckTag::Fail,
                                   what + (r.first_failure ? " s=" + std::to_string(r.first_failure->s) +
                                                                 " t=" + r.first_failure->t.str()
                                                           : ""));
        } catch (const PrecisionError&) {
          rep.associativity.record(CheckTag::Uncertified, what);
        }
        if (!options.residue_sweep) continue;
        try {
          const ResidueSweep r = sweep_residue_formulas(M, u, v, w);
          rep.residue.record(r.pass ? CheckTag::Pass : CheckTag::Fail, r.witness);
        } catch (const PrecisionError&) {
          rep.residue.record(CheckTag::Uncertified, what);
        }
      }

  if (W.dim() == 0) return rep;
  // Tuples (u, v, w, m, n, p) with m, n in the five lattice points ending at
  // the grading bounds and p in [-3, wt u + wt v].
  auto run = [&](std::size_t u, std::size_t v, std::size_t w, int64_t dm, int64_t dn, int64_t p) {
    const ScaledExponent m = grading_bound(M, u, w) + ScaledExponent(dm - 4);
    const ScaledExponent n = grading_bound(M, v, w) + ScaledExponent(dn - 4);
    const JacobiCheck c = check_jacobi_component(M, u, v, w, m, n, p);
    rep.jacobi.record(c.tag, "u=" + V.space().label(u) + " v=" + V.space().label(v) + " w=" + W.label(w) +
                                 " m=" + m.str() + " n=" + n.str() + " p=" + std::to_string(p));
  };
  std::size_t window = 0;
  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v) window += 25 * W.dim() * (V.weight(u) + V.weight(v) + 4);
  if (window <= options.exhaustive_limit) {
    for (std::size_t u = 0; u < V.dim(); ++u)
      for (std::size_t v = 0; v < V.dim(); ++v)
        for (std::size_t w = 0; w < W.dim(); ++w)
          for (int64_t dm = 0; dm < 5; ++dm)
            for (int64_t dn = 0; dn < 5; ++dn)
              for (int64_t p = -3; p <= V.weight(u) + V.weight(v); ++p) run(u, v, w, dm, dn, p);
    return rep;
  }
  std::mt19937_64 rng(options.seed);
  auto draw = [&](std::uint64_t n) { return static_cast<int64_t>(rng() % n); };
  for (std::size_t attempt = 0; attempt < options.jacobi_attempts && rep.jacobi.pass + rep.jacobi.fail <
                                                                          options.jacobi_samples;
       ++attempt) {
    const auto u = static_cast<std::size_t>(draw(V.dim()));
    const auto v = static_cast<std::size_t>(draw(V.dim()));
    const auto w = static_cast<std::size_t>(draw(W.dim()));
    const int64_t dm = draw(5), dn = draw(5);
    run(u, v, w, dm, dn, draw(V.weight(u) + V.weight(v) + 4) - 3);
  }
  return rep;
}

EmbeddingReport check_embedding(const InducedModule& S, int64_t element_weight, int64_t m_span) {
  const TruncatedVertexAlgebra& V = S.algebra();
  const Automorphism& g = S.twist();
  const AModule& W = S.context();
  const ScaledExponent base = S.base_degree();
  const ScaledExponent D = S.params().cutoff;
  EmbeddingReport rep;

  const auto& comp = S.words()->component(base);
  rep.base_is_w = comp.size() == W.dim();
  for (std::size_t w = 0; w < W.dim() && rep.base_is_w; ++w)
    rep.base_is_w = S.word(S.base_index(w)).modes.empty();

  Subspace image(S.space());
  for (std::size_t w = 0; w < W.dim(); ++w)
    if (!image.insert(S.embed_module(GradedVector::basis(w))) && rep.witness.empty())
      rep.witness = "W vector " + W.labels()[w] + " is dependent in the quotient";
  rep.injective = image.rank() == W.dim() && S.dim_at(base) == W.dim();

  const std::vector<std::size_t> L = light_basis(V, element_weight);
  if (!S.twisted()) {
    const int64_t n = base.as_integer();
    const ScaledExponent nn(n);
    for (std::size_t w = 0; w < W.dim(); ++w) {
      const GradedVector ew = S.embed(GradedVector::basis(w));
      for (std::size_t a : L)
        for (std::size_t u : L)
          for (std::size_t v : L) {
            // a(wt a - M - 1) sum_j C(wt u + n, j)(u_{j+m}v)(wt u + wt v - j - m + M - 2) w, m <= M - 3n - 2
            for (int64_t M = 0; M <= n; ++M)
              for (int64_t m = M - 3 * n - 2; m > M - 3 * n - 2 - m_span; --m) {
                const ScaledExponent K(V.weight(u) + V.weight(v) - m + M - 2);
                CheckTag tag;
                try {
                  const GradedVector inner = iterate_sum(S, wt(V, u) + nn, u, v, m, K, ew);
                  tag = zero_in_module(S, S.apply_mode(a, ScaledExponent(V.weight(a) - M - 1), inner));
                } catch (const PrecisionError&) {
                  tag = CheckTag::Uncertified;
                }
                rep.iterate_sum.record(tag, element_label(V, a, u, v, a, ScaledExponent(M), nn, m, w));
              }
            // a(wt a - M + N - 1) sum_j C(wt u + N + 2n, j)(u_{j+m}v)(...) b(wt b - N - 1) w, m <= M - 2N - 4n - 2
            for (std::size_t b : L)
              for (int64_t N = -n; ScaledExponent(N + n) <= D; ++N)
                for (int64_t M = N + n - D.floor(); M <= N + n; ++M) {
                  for (int64_t m = M - 2 * N - 4 * n - 2; m > M - 2 * N - 4 * n - 2 - m_span; --m) {
                    const ScaledExponent K(V.weight(u) + V.weight(v) - m + M - 2);
                    CheckTag tag;
                    try {
                      const GradedVector tail = S.apply_mode(b, ScaledExponent(V.weight(b) - N - 1), ew);
                      const GradedVector inner = iterate_sum(S, ScaledExponent(V.weight(u) + N + 2 * n), u, v, m, K, tail);
                      tag = zero_in_module(S, S.apply_mode(a, ScaledExponent(V.weight(a) - M + N - 1), inner));
                    } catch (const PrecisionError&) {
                      tag = CheckTag::Uncertified;
                    }
                    rep.mode_iterate_mode.record(tag, element_label(V, a, u, v, b, ScaledExponent(M), ScaledExponent(N), m, w));
                  }
                }
          }
    }
    return rep;
  }

  // Twisted: a in V^d, u in V^r, v in V^s, b in V^t with d + r + s + t = 0 mod T,
  // M in (r+s)/T + Z, N in -t/T + Z, m <= -N - 2 - (N - M) - delta_r - r/T.
  const int64_t T = g.order;
  const ScaledExponent one(1);
  for (std::size_t w = 0; w < W.dim(); ++w) {
    const GradedVector ew = S.embed(GradedVector::basis(w));
    for (std::size_t a : L)
      for (std::size_t u : L)
        for (std::size_t v : L)
          for (std::size_t b : L) {
            if ((g.label(a) + g.label(u) + g.label(v) + g.label(b)) % T != 0) continue;
            const ScaledExponent rs((g.label(u) + g.label(v)) % T, T);
            ScaledExponent N = ScaledExponent((T - g.label(b)) % T, T) - ScaledExponent(1);
            for (; N <= D; N += one) {
              const ScaledExponent M0 = N - D;
              ScaledExponent M = ScaledExponent(M0.floor()) + rs;
              if (M < M0) M += one;
              for (; M <= N + one; M += one) {
                // Bounds for u and v on b(wt b - N - 1)w. The written exponent wt u + N + delta_r + r/T
                // leaves r/T + Z when N is fractional, so both are rounded up onto their lattices; this
                // is the written element whenever it is on the lattice.
                const ScaledExponent e = on_lattice(wt(V, u) + N + ScaledExponent(g.delta(u)) + g.shift(u), g.shift(u));
                const ScaledExponent k = on_lattice(wt(V, v) + N, g.shift(v));
                const int64_t mtop = (wt(V, u) + wt(V, v) + M - ScaledExponent(2) - e - k).floor();
                for (int64_t m = mtop; m > mtop - m_span; --m) {
                  const ScaledExponent K(V.weight(u) + V.weight(v) - m - 2);
                  const std::string what = element_label(V, a, u, v, b, M, N, m, w);
                  try {
                    const GradedVector tail = S.apply_mode(b, wt(V, b) - N - one, ew);
                    const GradedVector inner = iterate_sum(S, e, u, v, m, K + M, tail);
                    const GradedVector x = S.apply_mode(a, wt(V, a) - M + N - one, inner);
                    if (N < ScaledExponent(0)) {
                      rep.negative_n.record(x.is_zero() ? CheckTag::Pass : CheckTag::Fail, what);
                    } else if (M > N) {
                      rep.negative_middle.record(x.is_zero() ? CheckTag::Pass : CheckTag::Fail, what);
                    } else {
                      rep.general.record(zero_in_module(S, x), what);
                    }
                  } catch (const PrecisionError&) {
                    CheckCount& c = N < ScaledExponent(0) ? rep.negative_n : M > N ? rep.negative_middle : rep.general;
                    c.record(CheckTag::Uncertified, what);
                  }
                }
              }
            }
          }
  }
  return rep;
}

ModuleMap induced_map(const InducedModule& S1, const InducedModule& S2, const LinearMap& f) {
  const AModule& W1 = S1.context();
  const AModule& W2 = S2.context();
  if (W1.quotient_ptr() != W2.quotient_ptr())
    throw std::invalid_argument("induced_map: modules over different Zhu quotients");
  if (f.size() != W1.dim()) throw std::invalid_argument("induced_map: map has the wrong number of columns");
  for (std::size_t i = 0; i < W1.quotient().dim(); ++i)
    for (std::size_t w = 0; w < W1.dim(); ++w)
      if (apply_map(f, W1.rho(i)[w]) != apply_map(W2.rho(i), f[w]))
        throw std::invalid_argument("induced_map: f is not a module map (quotient basis " + std::to_string(i) + ")");
  ModuleMap out;
  const std::size_t dim = S1.module().space().dim();
  for (std::size_t b = 0; b < dim; ++b) {
    GradedVector image;
    const GradedVector words = S1.from_module(GradedVector::basis(b));
    for (const auto& [idx, c] : words.entries()) {
      TensorWord word = S1.word(idx);
      word.base = apply_map(f, word.base);
      image.add_scaled(S2.reduce_word(word), c);
    }
    out.push_back(S2.to_module(image));
  }
  return out;
}

CheckCount check_intertwines(const ModuleData& source, const ModuleData& target, const ModuleMap& phi,
                             const std::vector<std::size_t>& target_index) {
  const TruncatedVertexAlgebra& A = source.algebra();
  CheckCount out;
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t b = 0; b < source.space().dim(); ++b) {
      const ScaledExponent top = source.degree(b) + wt(A, x) - ScaledExponent(1);
      for (ScaledExponent r = source.lattice_ceil(x, top - source.cutoff()); r <= top; r += ScaledExponent(1)) {
        const std::string what = A.space().label(x) + "_" + r.str() + " on " + source.space().label(b);
        try {
          const GradedVector lhs = apply_map(phi, source.act(x, r, b));
          const GradedVector rhs = target.act(target_index.at(x), r, phi.at(b));
          out.record(lhs == rhs ? CheckTag::Pass : CheckTag::Fail, what);
        } catch (const PrecisionError&) {
          out.record(CheckTag::Uncertified, what);
        }
      }
    }
  return out;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap out;
  for (const auto& col : f) out.push_back(apply_map(g, col));
  return out;
}

UniversalReport universal_map(const InducedModule& S, const ModuleData& target, const LinearMap& f) {
  const AModule& W = S.context();
  const ZhuQuotient& Q = W.quotient();
  if (target.algebra_ptr() != S.algebra_ptr())
    throw std::invalid_argument("universal_map: target is over a different algebra");
  if (f.size() != W.dim()) throw std::invalid_argument("universal_map: map has the wrong number of columns");
  UniversalReport rep;

  const Subspace omega = omega_n(target, S.twisted() ? 0 : S.base_degree().as_integer());
  rep.omega_map = true;
  for (std::size_t w = 0; w < W.dim() && rep.omega_map; ++w) {
    rep.omega_map = omega.contains(f[w]);
    for (std::size_t i = 0; i < Q.dim() && rep.omega_map; ++i) {
      const GradedVector x = GradedVector::basis(Q.representative(i));
      rep.omega_map = o_action(target, x, f[w]) == apply_map(f, W.act(x, GradedVector::basis(w)));
    }
  }
  if (!rep.omega_map) rep.witness = "f does not land in Omega as a Zhu module map";

  auto on_words = [&](const GradedVector& v) {
    GradedVector out;
    for (const auto& [idx, c] : v.entries()) {
      const TensorWord word = S.word(idx);
      GradedVector y = apply_map(f, word.base);
      for (auto it = word.modes.rbegin(); it != word.modes.rend(); ++it) y = target.act(it->u, it->m, y);
      out.add_scaled(y, c);
    }
    return out;
  };

  for (const auto& r : S.relations().basis()) {
    const ScaledExponent d = S.words()->degree(r.entries().begin()->first);
    if (d > target.cutoff()) continue;
    try {
      rep.relations.record(on_words(r).is_zero() ? CheckTag::Pass : CheckTag::Fail,
                           "relation at degree " + d.str());
    } catch (const PrecisionError&) {
      rep.relations.record(CheckTag::Uncertified, "relation at degree " + d.str());
    }
  }

  const ModuleData& src = S.module();
  rep.determined = true;
  for (std::size_t b = 0; b < src.space().dim(); ++b) {
    const GradedVector e = GradedVector::basis(b);
    const GradedVector f_b = S.from_module(e);
    rep.map.push_back(on_words(f_b));
    if (f_b.entries().size() != 1 || S.to_module(S.reduce_word(S.word(f_b.entries().begin()->first))) != e) {
      rep.determined = false;
      if (rep.witness.empty()) rep.witness = "basis vector " + src.space().label(b) + " is not a single word";
    }
  }

  rep.restricts = true;
  for (std::size_t w = 0; w < W.dim(); ++w)
    rep.restricts = rep.restricts && apply_map(rep.map, S.embed_module(GradedVector::basis(w))) == f[w];

  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < src.algebra().dim(); ++i) index.push_back(S.acting_index(i));
  rep.intertwining = check_intertwines(src, target, rep.map, index);

  rep.isomorphism = true;
  for (ScaledExponent d(0); d <= S.params().cutoff; d += ScaledExponent(1, S.twist().order)) {
    Subspace span(target.space_ptr());
    for (std::size_t b : src.space().component(d)) span.insert(rep.map[b]);
    const std::size_t n = src.space().dim_at(d);
    if (span.rank() != n || target.space().dim_at(d) != n) {
      rep.isomorphism = false;
      if (rep.witness.empty()) rep.witness = "not bijective at degree " + d.str();
    }
  }
  return rep;
}

CheckCount check_confluence(const InducedModule& S, int64_t weight) {
  const TruncatedVertexAlgebra& V = S.algebra();
  const ScaledExponent D = S.params().cutoff;
  const ScaledExponent one(1), low(-1);
  const std::vector<std::size_t> L = light_basis(V, weight);
  CheckCount out;
  // Modes of x taking a vector of degree e to degrees in [-1, D].
  auto modes = [&](std::size_t x, const ScaledExponent& e) {
    std::vector<ScaledExponent> ms;
    const ScaledExponent hi = wt(V, x) - one + e - low;  // degree -1
    ScaledExponent m = hi - (D - low);
    m = ScaledExponent(m.floor()) + S.twist().shift(x);
    while (m < hi - (D - low)) m += one;
    for (; m <= hi; m += one) ms.push_back(m);
    return ms;
  };
  for (std::size_t w = 0; w < S.context().dim(); ++w)
    for (std::size_t z : L)
      for (const ScaledExponent& s : modes(z, S.base_degree())) {
        const ScaledExponent e1 = wt(V, z) - s - one + S.base_degree();
        if (e1 < ScaledExponent(0)) continue;  // the whole word is killed on both sides
        for (std::size_t v : L)
          for (const ScaledExponent& q : modes(v, e1)) {
            const ScaledExponent e2 = wt(V, v) - q - one + e1;
            for (std::size_t u : L)
              for (const ScaledExponent& p : modes(u, e2)) {
                const TensorWord word{{{u, p}, {v, q}, {z, s}}, GradedVector::basis(w)};
                const std::string what = V.space().label(u) + "(" + p.str() + ")" + V.space().label(v) + "(" +
                                         q.str() + ")" + V.space().label(z) + "(" + s.str() + ") w" +
                                         std::to_string(w);
                try {
                  const GradedVector diff = S.reduce_word(word) - S.reduce_word_pair_first(word);
                  out.record(S.relations().contains(diff) ? CheckTag::Pass : CheckTag::Fail, what);
                } catch (const PrecisionError&) {
                  out.record(CheckTag::Uncertified, what);
                }
              }
          }
      }
  return out;
}

}  // namespace vtx
