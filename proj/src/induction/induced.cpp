#include "vtx/induction/induced.hpp"

#include <algorithm>
#include <stdexcept>

namespace vtx {

namespace {

ScaledExponent wt(const TruncatedVertexAlgebra& V, std::size_t u) { return ScaledExponent(V.weight(u)); }

}  // namespace

InducedModule::InducedModule(AlgebraPtr V, std::shared_ptr<const AModule> context, InductionParams params)
    : V_(std::move(V)),
      W_(std::move(context)),
      params_(std::move(params)),
      twist_(W_->quotient().twist()),
      base_(W_->quotient().kind() == ZhuQuotient::Kind::Level ? ScaledExponent(W_->quotient().level())
                                                              : ScaledExponent(0)),
      step_(1, twist_.order),
      stability_(params_.stability < 0 ? twist_.order : params_.stability),
      relations_(std::make_shared<GradedSpace>()) {
  if (W_->quotient().algebra_ptr() != V_)
    throw std::invalid_argument("InducedModule: the context module is over a different algebra");
  if (params_.cutoff < base_) throw std::invalid_argument("InducedModule: cutoff below the base degree");
  if (params_.margin < ScaledExponent(0)) throw std::invalid_argument("InducedModule: negative margin");
  if (params_.action_weight < 0 || params_.action_weight > V_->cutoff())
    throw std::invalid_argument("InducedModule: action weight outside the algebra cutoff");
  build_words();
  build_relations();
  build_space();
  if (params_.tabulate) build_module();
}

std::vector<ScaledExponent> InducedModule::degrees() const {
  std::vector<ScaledExponent> out;
  for (ScaledExponent d(0); d <= work_cutoff(); d += step_) out.push_back(d);
  return out;
}

bool InducedModule::left_generator(std::size_t u) const {
  return params_.generator_weight < 0 || V_->weight(u) <= params_.generator_weight;
}

bool InducedModule::in_lattice(std::size_t u, const ScaledExponent& m) const {
  return (m - twist_.shift(u)).is_integer();
}

ScaledExponent InducedModule::grading_bound(std::size_t u, const ScaledExponent& e) const {
  const ScaledExponent x = wt(*V_, u) - ScaledExponent(1) + e + step_;
  const ScaledExponent s = twist_.shift(u);
  return s + ScaledExponent((x - s).ceil());
}

void InducedModule::build_words() {
  const TruncatedVertexAlgebra& V = *V_;
  auto space = std::make_shared<GradedSpace>(twist_.order);
  std::vector<std::size_t> by_weight(V.dim());
  for (std::size_t i = 0; i < V.dim(); ++i) by_weight[i] = i;
  // Heavier words first, so that they become pivots and light words represent the quotient.
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [&](std::size_t a, std::size_t b) { return V.weight(a) > V.weight(b); });
  for (const ScaledExponent& d : degrees()) {
    if (d == base_) {
      for (std::size_t w0 = 0; w0 < W_->dim(); ++w0) {
        base_index_.push_back(space->add_basis(d, "[" + W_->labels()[w0] + "]"));
        entries_.push_back({true, 0, ScaledExponent(0), w0});
      }
      continue;
    }
    for (std::size_t u : by_weight) {
      const ScaledExponent m = wt(V, u) - ScaledExponent(1) - d + base_;
      if (!in_lattice(u, m)) continue;
      for (std::size_t w0 = 0; w0 < W_->dim(); ++w0) {
        const std::size_t idx =
            space->add_basis(d, "{" + V.space().label(u) + "}(" + m.str() + ")[" + W_->labels()[w0] + "]");
        entries_.push_back({false, u, m, w0});
        word_index_[{u, m, w0}] = idx;
      }
    }
  }
  words_ = space;
  relations_ = Subspace(words_);
}

std::optional<std::size_t> InducedModule::word_index(std::size_t u, const ScaledExponent& m, std::size_t w0) const {
  auto it = word_index_.find({u, m, w0});
  if (it == word_index_.end()) return std::nullopt;
  return it->second;
}

TensorWord InducedModule::word(std::size_t idx) const {
  const Entry& e = entries_.at(idx);
  TensorWord out{{}, GradedVector::basis(e.w0)};
  if (!e.pure) out.modes.push_back({e.u, e.m});
  return out;
}

GradedVector InducedModule::embed(const GradedVector& w) const {
  GradedVector out;
  for (const auto& [i, c] : w.entries()) out.add(base_index_.at(i), c);
  return out;
}

GradedVector InducedModule::single(const GradedVector& y, const ScaledExponent& m, std::size_t w0) const {
  const TruncatedVertexAlgebra& V = *V_;
  GradedVector out;
  for (const auto& [i, c] : y.entries()) {
    if (!in_lattice(i, m)) continue;
    const ScaledExponent d = wt(V, i) - m - ScaledExponent(1) + base_;
    if (d < ScaledExponent(0)) continue;  // (a)
    if (d > work_cutoff())
      throw PrecisionError("induced module: word {" + V.space().label(i) + "}(" + m.str() + ") has degree " +
                           d.str() + " above the work cutoff");
    if (d == base_) {  // (b): o(u)w0 -> rho(u + O)w0
      auto it = rho_cache_.find({i, w0});
      if (it == rho_cache_.end())
        it = rho_cache_.emplace(std::make_pair(i, w0), embed(W_->act(GradedVector::basis(i), GradedVector::basis(w0))))
                 .first;
      out.add_scaled(it->second, c);
      continue;
    }
    out.add(word_index_.at({i, m, w0}), c);
  }
  return out;
}

bool InducedModule::pair_fits(std::size_t u, const ScaledExponent& p, std::size_t v, const ScaledExponent& q,
                              const ScaledExponent& e) const {
  const TruncatedVertexAlgebra& V = *V_;
  if (!in_lattice(u, p) || !in_lattice(v, q)) return true;
  const ScaledExponent l = grading_bound(u, e), k = grading_bound(v, e);
  if (q >= k) return true;
  const int64_t shift = (p - l).as_integer();
  int64_t imax = (k - q).as_integer() - 1;
  if (shift >= 0) imax = std::min(imax, shift);
  return V.weight(u) + V.weight(v) - 1 - (shift - imax) <= V.cutoff();
}

GradedVector InducedModule::pair_product(std::size_t u, const ScaledExponent& p, std::size_t v,
                                         const ScaledExponent& q, const GradedVector& X,
                                         const ScaledExponent& e) const {
  const TruncatedVertexAlgebra& V = *V_;
  if (!in_lattice(u, p) || !in_lattice(v, q)) return {};
  const ScaledExponent l = grading_bound(u, e), k = grading_bound(v, e);
  if (q >= k) return {};
  const int64_t shift = (p - l).as_integer();
  int64_t imax = (k - q).as_integer() - 1;
  if (shift >= 0) imax = std::min(imax, shift);  // C(p-l, i) = 0 beyond
  const int64_t top = V.weight(u) + V.weight(v) - 1;  // largest s with u_s v possibly nonzero
  if (!pair_fits(u, p, v, q, e))
    throw PrecisionError("induced module: pair formula for " + V.space().label(u) + ", " + V.space().label(v) +
                         " needs iterates above the algebra cutoff");
  GradedVector out;
  const Rational lr = l.to_rational();
  Rational a(1);  // C(p-l, i)
  for (int64_t i = 0; i <= imax; ++i) {
    if (i > 0) a = a * Rational(shift - i + 1) / Rational(i);
    if (a.is_zero()) break;
    Rational b(1);  // C(l, j)
    for (int64_t j = 0; shift - i + j <= top; ++j) {
      if (j > 0) b = b * (lr - Rational(j - 1)) / Rational(j);
      if (b.is_zero()) break;
      const GradedVector y = V.mode(u, shift - i + j, v);
      if (y.is_zero()) continue;
      out.add_scaled(apply_mode(y, q + l + ScaledExponent(i - j), X), a * b);
    }
  }
  return out;
}

GradedVector InducedModule::apply_mode(std::size_t u, const ScaledExponent& p, const GradedVector& f) const {
  if (!in_lattice(u, p)) return {};
  GradedVector out;
  for (const auto& [idx, c] : f.entries()) {
    const Entry& x = entries_.at(idx);
    if (x.pure) {
      out.add_scaled(single(GradedVector::basis(u), p, x.w0), c);
      continue;
    }
    const ScaledExponent e = words_->degree(idx);
    if (wt(*V_, u) - p - ScaledExponent(1) + e < ScaledExponent(0)) continue;  // (a)
    // (c) with tail w0 in W
    out.add_scaled(pair_product(u, p, x.u, x.m, embed(GradedVector::basis(x.w0)), base_), c);
  }
  return out;
}

GradedVector InducedModule::apply_mode(const GradedVector& y, const ScaledExponent& p, const GradedVector& f) const {
  GradedVector out;
  for (const auto& [i, c] : y.entries()) out.add_scaled(apply_mode(i, p, f), c);
  return out;
}

GradedVector InducedModule::reduce_word(const TensorWord& word) const {
  GradedVector f = embed(word.base);
  for (auto it = word.modes.rbegin(); it != word.modes.rend(); ++it) f = apply_mode(it->u, it->m, f);
  return f;
}

GradedVector InducedModule::reduce_word_pair_first(const TensorWord& word) const {
  if (word.modes.size() < 2) return reduce_word(word);
  const TruncatedVertexAlgebra& V = *V_;
  ScaledExponent d = base_;
  std::vector<ScaledExponent> suffix(word.modes.size());
  for (std::size_t r = word.modes.size(); r-- > 0;) {
    d += wt(V, word.modes[r].u) - word.modes[r].m - ScaledExponent(1);
    if (d < ScaledExponent(0)) return {};
    suffix[r] = d;
  }
  TensorWord tail{{word.modes.begin() + 2, word.modes.end()}, word.base};
  const ScaledExponent e = word.modes.size() > 2 ? suffix[2] : base_;
  return pair_product(word.modes[0].u, word.modes[0].m, word.modes[1].u, word.modes[1].m, reduce_word(tail), e);
}

std::vector<std::size_t> InducedModule::representatives(const ScaledExponent& e) const {
  std::vector<std::size_t> out;
  for (std::size_t idx : words_->component(e))
    if (!relations_.is_pivot(idx)) out.push_back(idx);
  return out;
}

std::vector<GradedVector> InducedModule::j_relations(const ScaledExponent& d) const {
  const TruncatedVertexAlgebra& V = *V_;
  std::vector<GradedVector> out;
  for (const ScaledExponent& e : degrees()) {
    // Tails from the light part; heavier representatives sit on the cutoff boundary.
    const int64_t light = std::max<int64_t>(0, (e - base_).ceil()) + stability_;
    std::vector<std::size_t> tails;
    for (std::size_t idx : representatives(e))
      if (entries_[idx].pure || V.weight(entries_[idx].u) <= light) tails.push_back(idx);
    if (tails.empty()) continue;
    for (std::size_t u = 0; u < V.dim(); ++u)
      for (std::size_t v = 0; v < V.dim(); ++v) {
        if (!left_generator(u)) continue;
        // The m range below is empty unless wt u + wt v <= cutoff + 1 - (d + e).
        if (V.weight(u) + V.weight(v) > V.cutoff() + 1 - (d + e).floor()) continue;
        const ScaledExponent N = wt(V, u) + wt(V, v) + e - d;
        if (!(N - twist_.shift(u) - twist_.shift(v)).is_integer()) continue;
        const ScaledExponent l = grading_bound(u, e), k = grading_bound(v, e);
        const int64_t top = V.weight(u) + V.weight(v) - 1;
        const int64_t m_max = (N - ScaledExponent(2) - l - k).floor();
        const int64_t m_min = top - V.cutoff();
        for (int64_t m = m_min; m <= m_max; ++m)
          for (std::size_t w : tails) {
            const GradedVector X = GradedVector::basis(w);
            GradedVector r;
            try {
              Rational c(1);  // C(l, j)
              for (int64_t j = 0; j + m <= top; ++j) {
                if (j > 0) c = c * (l.to_rational() - Rational(j - 1)) / Rational(j);
                if (c.is_zero()) break;
                const GradedVector y = V.mode(u, j + m, v);
                if (!y.is_zero()) r.add_scaled(apply_mode(y, N - ScaledExponent(j + m + 2), X), c);
              }
            } catch (const PrecisionError&) {
              continue;
            }
            if (!r.is_zero()) out.push_back(std::move(r));
          }
      }
  }
  return out;
}

bool InducedModule::add_relation(const GradedVector& r, std::vector<GradedVector>& fresh) {
  if (!relations_.insert(r)) return false;
  fresh.push_back(r);
  return true;
}

void InducedModule::close_relations(std::vector<GradedVector> fresh) {
  const TruncatedVertexAlgebra& V = *V_;
  const ScaledExponent top = work_cutoff();
  while (!fresh.empty()) {
    const GradedVector g = std::move(fresh.back());
    fresh.pop_back();
    const ScaledExponent d = words_->degree(g.entries().begin()->first);
    for (std::size_t x = 0; x < V.dim(); ++x) {
      if (V.weight(x) > params_.action_weight) continue;
      // target degree d + wt x - r - 1 in [0, top]
      const ScaledExponent hi = wt(V, x) - ScaledExponent(1) + d;
      const ScaledExponent s = twist_.shift(x);
      for (ScaledExponent r = s + ScaledExponent((hi - top - s).ceil()); r <= hi; r += ScaledExponent(1)) {
        GradedVector img;
        try {
          img = apply_mode(x, r, g);
        } catch (const PrecisionError&) {
          ++stats_.uncertified;
          continue;
        }
        if (add_relation(img, fresh)) ++stats_.closure;
      }
    }
  }
}

void InducedModule::build_relations() {
  const TruncatedVertexAlgebra& V = *V_;
  std::vector<GradedVector> fresh;
  // (b)/(c) consistency: u(p) o(v) w0 rewritten both ways.
  for (std::size_t u = 0; u < V.dim(); ++u)
    for (std::size_t v = 0; v < V.dim(); ++v) {
      if (!left_generator(u) || twist_.label(v) != 0) continue;
      const ScaledExponent q = wt(V, v) - ScaledExponent(1);
      for (const ScaledExponent& d : degrees()) {
        const ScaledExponent p = wt(V, u) - ScaledExponent(1) + base_ - d;
        if (!in_lattice(u, p)) continue;
        for (std::size_t w0 = 0; w0 < W_->dim(); ++w0) {
          const GradedVector e0 = GradedVector::basis(w0);
          if (!pair_fits(u, p, v, q, base_)) {
            ++stats_.uncertified;
            continue;
          }
          GradedVector r;
          try {
            r = apply_mode(u, p, embed(W_->act(GradedVector::basis(v), e0))) -
                pair_product(u, p, v, q, embed(e0), base_);
          } catch (const PrecisionError&) {
            ++stats_.uncertified;
            continue;
          }
          if (add_relation(r, fresh)) ++stats_.consistency;
        }
      }
    }
  for (const TensorWord& x : params_.extra_relations) add_relation(reduce_word(x), fresh);
  close_relations(std::move(fresh));
  fresh.clear();

  if (params_.pair_relations) {
    for (const ScaledExponent& e : degrees())
      for (std::size_t X : representatives(e)) {
        if (entries_[X].pure) continue;
        const GradedVector tail = GradedVector::basis(X);
        for (std::size_t u = 0; u < V.dim(); ++u)
          for (std::size_t v = 0; v < V.dim(); ++v)
            for (const ScaledExponent& d1 : degrees()) {
              const ScaledExponent q = wt(V, v) - ScaledExponent(1) + e - d1;
              if (!in_lattice(v, q)) continue;
              for (const ScaledExponent& d : degrees()) {
                const ScaledExponent p = wt(V, u) - ScaledExponent(1) + d1 - d;
                if (!in_lattice(u, p)) continue;
                GradedVector r;
                try {
                  r = apply_mode(u, p, apply_mode(v, q, tail)) - pair_product(u, p, v, q, tail, e);
                } catch (const PrecisionError&) {
                  ++stats_.uncertified;
                  continue;
                }
                if (add_relation(r, fresh)) ++stats_.pair;
              }
            }
      }
    close_relations(std::move(fresh));
    fresh.clear();
  }

  for (const ScaledExponent& d : degrees()) {
    for (const auto& r : j_relations(d))
      if (add_relation(r, fresh)) ++stats_.truncation;
    close_relations(std::move(fresh));
    fresh.clear();
  }
  quotient_.emplace(words_, relations_);
}

std::vector<std::size_t> InducedModule::graded_dims() const {
  std::vector<std::size_t> out;
  for (ScaledExponent d(0); d <= params_.cutoff; d += step_) out.push_back(dim_at(d));
  return out;
}

void InducedModule::build_space() {
  const TruncatedVertexAlgebra& V = *V_;
  auto space = std::make_shared<GradedSpace>(twist_.order);
  for (ScaledExponent d(0); d <= params_.cutoff; d += step_) {
    // Representatives by weight; W itself counts as weight 0.
    std::map<int64_t, std::vector<std::size_t>> reps;
    for (std::size_t idx : representatives(d)) reps[entries_[idx].pure ? 0 : V.weight(entries_[idx].u)].push_back(idx);
    int64_t B = std::max<int64_t>(0, (d - base_).ceil());
    auto quiet = [&](int64_t b) {
      for (int64_t w = b + 1; w <= b + stability_; ++w)
        if (reps.count(w)) return false;
      return true;
    };
    while (B + stability_ <= V.cutoff() && !quiet(B)) ++B;
    if (B + stability_ > V.cutoff())
      throw PrecisionError("induced module: no certified spanning weight at degree " + d.str() +
                           "; raise the algebra cutoff");
    spanning_[d] = B;
    for (const auto& [w, idxs] : reps) {
      if (w > B) break;
      for (std::size_t idx : idxs) {
        to_module_[idx] = space->add_basis(d, words_->label(idx));
        from_module_.push_back(idx);
      }
    }
  }
  space_ = space;
}

void InducedModule::build_module() {
  const TruncatedVertexAlgebra& V = *V_;
  auto acting = std::make_shared<const TruncatedVertexAlgebra>(truncate_algebra(V, params_.action_weight, &acting_map_));
  auto M = std::make_shared<ModuleData>(acting, restrict_automorphism(twist_, acting_map_), space_, params_.cutoff);
  for (std::size_t b = 0; b < space_->dim(); ++b) {
    const GradedVector rep = GradedVector::basis(from_module_[b]);
    const ScaledExponent d = space_->degree(b);
    for (std::size_t x = 0; x < acting->dim(); ++x) {
      const std::size_t xv = acting_map_[x];
      const ScaledExponent hi = wt(V, xv) - ScaledExponent(1) + d;
      const ScaledExponent s = twist_.shift(xv);
      for (ScaledExponent r = s + ScaledExponent((hi - params_.cutoff - s).ceil()); r <= hi; r += ScaledExponent(1)) {
        GradedVector img = to_module(apply_mode(xv, r, rep));
        if (!img.is_zero()) M->set_action(x, r, b, std::move(img));
      }
    }
  }
  module_ = M;
}

GradedVector InducedModule::to_module(const GradedVector& f) const {
  GradedVector out;
  const GradedVector r = relations_.reduce(f);
  for (const auto& [idx, c] : r.entries()) {
    auto it = to_module_.find(idx);
    if (it == to_module_.end())
      throw PrecisionError("induced module: " + words_->label(idx) + " is above the cutoff or on the boundary");
    out.add(it->second, c);
  }
  return out;
}

GradedVector InducedModule::from_module(const GradedVector& x) const {
  GradedVector out;
  for (const auto& [i, c] : x.entries()) out.add(from_module_.at(i), c);
  return out;
}

InducedModule build_induced(const AlgebraPtr& V, std::shared_ptr<const AModule> W, const InductionParams& params) {
  return InducedModule(V, std::move(W), params);
}

}  // namespace vtx
