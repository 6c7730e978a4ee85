#include "vtx/residue_identities/module_data.hpp"

#include "vtx/vertex_data/heisenberg.hpp"
#include "vtx/vertex_data/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace vtx {

namespace {

std::string action_str(const ModuleData& M, std::size_t u, const ScaledExponent& n, std::size_t w) {
  return "(" + M.algebra().space().label(u) + ")_" + n.str() + "(" + M.space().label(w) + ")";
}

}  // namespace

ModuleData::ModuleData(AlgebraPtr algebra, Automorphism twist, SpacePtr space, ScaledExponent cutoff)
    : algebra_(std::move(algebra)), twist_(std::move(twist)), space_(std::move(space)), cutoff_(cutoff) {
  if (twist_.labels.size() != algebra_->dim()) throw std::invalid_argument("ModuleData: twist labels do not match V");
  if (space_->grading_scale() % twist_.order != 0 && twist_.order % space_->grading_scale() != 0)
    throw std::invalid_argument("ModuleData: grading scale incompatible with the twist order");
  for (const auto& [d, idx] : space_->components())
    if (d < ScaledExponent(0) || d > cutoff_)
      throw AxiomError("ModuleData: degree " + d.str() + " outside 0.." + cutoff_.str());
}

bool ModuleData::in_lattice(std::size_t u, const ScaledExponent& n) const { return (n - twist_.shift(u)).is_integer(); }

ScaledExponent ModuleData::lattice_ceil(std::size_t u, const ScaledExponent& x) const {
  const ScaledExponent s = twist_.shift(u);
  return s + ScaledExponent((x - s).ceil());
}

ScaledExponent ModuleData::result_degree(std::size_t u, const ScaledExponent& n, std::size_t w) const {
  return degree(w) + ScaledExponent(algebra_->weight(u)) - n - ScaledExponent(1);
}

void ModuleData::set_action(std::size_t u, const ScaledExponent& n, std::size_t w, GradedVector value) {
  if (!in_lattice(u, n)) {
    if (!value.is_zero()) throw AxiomError("mode off the twist lattice at " + action_str(*this, u, n, w));
    return;
  }
  const ScaledExponent d = result_degree(u, n, w);
  if (d < ScaledExponent(0) || d > cutoff_) {
    if (!value.is_zero()) throw AxiomError("action entry outside 0..cutoff at " + action_str(*this, u, n, w));
    return;
  }
  for (const auto& [i, c] : value.entries())
    if (degree(i) != d) throw AxiomError("grading violated at " + action_str(*this, u, n, w));
  if (value.is_zero()) actions_.erase({u, n, w});
  else actions_[{u, n, w}] = std::move(value);
}

void ModuleData::perturb(std::size_t u, const ScaledExponent& n, std::size_t w, std::size_t component,
                         const Rational& delta) {
  GradedVector& e = actions_[{u, n, w}];
  e.add(component, delta);
  if (e.is_zero()) actions_.erase({u, n, w});
}

GradedVector ModuleData::act(std::size_t u, const ScaledExponent& n, std::size_t w) const {
  if (!in_lattice(u, n)) return {};
  const ScaledExponent d = result_degree(u, n, w);
  if (d < ScaledExponent(0)) return {};
  if (d > cutoff_)
    throw PrecisionError("module overflow: " + action_str(*this, u, n, w) + " has degree " + d.str() +
                         " above cutoff " + cutoff_.str());
  auto it = actions_.find({u, n, w});
  return it == actions_.end() ? GradedVector{} : it->second;
}

GradedVector ModuleData::act(std::size_t u, const ScaledExponent& n, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [j, c] : w.entries()) out.add_scaled(act(u, n, j), c);
  return out;
}

GradedVector ModuleData::act(const GradedVector& u, const ScaledExponent& n, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [i, a] : u.entries()) {
    if (!in_lattice(i, n)) continue;
    for (const auto& [j, b] : w.entries()) out.add_scaled(act(i, n, j), a * b);
  }
  return out;
}

void ModuleData::check_axioms() const {
  for (const auto& [key, value] : actions_) {
    const auto& [u, n, w] = key;
    if (!in_lattice(u, n)) throw AxiomError("mode off the twist lattice at " + action_str(*this, u, n, w));
    const ScaledExponent d = result_degree(u, n, w);
    for (const auto& [i, c] : value.entries())
      if (degree(i) != d) throw AxiomError("grading violated at " + action_str(*this, u, n, w));
  }
  const GradedVector& vac = algebra_->vacuum();
  for (std::size_t w = 0; w < space_->dim(); ++w) {
    const GradedVector bw = GradedVector::basis(w);
    for (ScaledExponent n(degree(w) - cutoff_ - ScaledExponent(1)); n < degree(w); n += ScaledExponent(1)) {
      if (!n.is_integer()) continue;
      const GradedVector got = act(vac, n, bw);
      const GradedVector want = n == ScaledExponent(-1) ? bw : GradedVector{};
      if (got != want)
        throw AxiomError("vacuum does not act as the identity: 1_" + n.str() + "(" + space_->label(w) + ") = " +
                         got.str(*space_));
    }
  }
}

std::string fock_label(const FockOracle& oracle, const FockOracle::State& s) {
  std::string out;
  for (auto k : s) out += "a(-" + ScaledExponent(k, oracle.order()).str() + ")";
  if (oracle.order() == 1) return out + "|" + oracle.momentum().str() + ">";
  return out + "|tw>";
}

ModuleData build_fock_module(const AlgebraPtr& V, const Automorphism& twist, FockOracle& oracle,
                             const ScaledExponent& cutoff) {
  auto space = std::make_shared<GradedSpace>(oracle.order());
  std::vector<FockOracle::State> states;
  std::map<FockOracle::State, std::size_t> index;
  for (ScaledExponent d(0); d <= cutoff; d += ScaledExponent(1, oracle.order()))
    for (auto& s : oracle.states_of_degree(d)) {
      index[s] = space->add_basis(d, fock_label(oracle, s));
      states.push_back(s);
    }
  ModuleData M(V, twist, space, cutoff);
  std::vector<FockOracle::State> vstates;
  for (std::size_t u = 0; u < V->dim(); ++u) vstates.push_back(heisenberg_state(V->space().label(u)));
  for (std::size_t u = 0; u < V->dim(); ++u)
    for (std::size_t w = 0; w < states.size(); ++w) {
      const ScaledExponent top = M.degree(w) + ScaledExponent(V->weight(u) - 1);
      for (ScaledExponent n = M.lattice_ceil(u, top - cutoff); n <= top; n += ScaledExponent(1)) {
        GradedVector value;
        for (const auto& [s, c] : oracle.field_mode(vstates[u], n, states[w])) value.add(index.at(s), c);
        M.set_action(u, n, w, std::move(value));
      }
    }
  M.check_axioms();
  return M;
}

ModuleData load_module(std::istream& in, const AlgebraPtr& V, const Automorphism& twist) {
  const auto sections = parse_sections(in);
  auto space = std::make_shared<GradedSpace>();
  std::optional<ScaledExponent> cutoff;
  ScaledExponent max_degree(0);
  bool have_module = false;
  for (const auto& sec : sections) {
    if (sec.header[0] != "module") continue;
    if (have_module) throw ParseError("duplicate [module] section", sec.header_line);
    have_module = true;
    for (std::size_t i = 0; i < sec.lines.size(); ++i) {
      const auto& t = sec.lines[i];
      const int ln = sec.line_numbers[i];
      try {
        if (t.size() == 2 && t[0] == "scale") {
          if (space->dim() != 0) throw ParseError("'scale' must precede the degrees", ln);
          space = std::make_shared<GradedSpace>(std::stoll(t[1]));
        } else if (t.size() == 2 && t[0] == "cutoff") {
          cutoff = ScaledExponent::parse(t[1]);
        } else if (t.size() >= 3 && t[0] == "degree" && t[2] == ":") {
          const ScaledExponent d = ScaledExponent::parse(t[1]);
          max_degree = std::max(max_degree, d);
          for (std::size_t j = 3; j < t.size(); ++j) {
            if (space->find(t[j]) != space->dim()) throw ParseError("duplicate label " + t[j], ln);
            space->add_basis(d, t[j]);
          }
        } else {
          throw ParseError("expected 'scale T', 'cutoff D' or 'degree d : labels'", ln);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& ex) {
        throw ParseError(ex.what(), ln);
      }
    }
  }
  if (!have_module) throw ParseError("missing [module] section");
  ModuleData M(V, twist, space, cutoff.value_or(max_degree));
  for (const auto& sec : sections) {
    const auto& h = sec.header;
    if (h[0] == "module") continue;
    if (h[0] != "action" || h.size() != 4) throw ParseError("expected [action u n w]", sec.header_line);
    const std::size_t u = V->space().find(h[1]);
    const std::size_t w = space->find(h[3]);
    if (u == V->dim() || w == space->dim()) throw ParseError("unknown label in action header", sec.header_line);
    ScaledExponent n;
    try {
      n = ScaledExponent::parse(h[2]);
    } catch (const std::exception&) {
      throw ParseError("bad mode index " + h[2], sec.header_line);
    }
    M.set_action(u, n, w, parse_coordinates(sec, *space));
  }
  M.check_axioms();
  return M;
}

ModuleData load_module_file(const std::string& path, const AlgebraPtr& V, const Automorphism& twist) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_module(in, V, twist);
}

void write_module(std::ostream& out, const ModuleData& M) {
  const GradedSpace& s = M.space();
  out << "[module]\nscale " << s.grading_scale() << "\ncutoff " << M.cutoff().str() << "\n";
  for (const auto& [d, idx] : s.components()) {
    out << "degree " << d.str() << " :";
    for (auto i : idx) out << " " << s.label(i);
    out << "\n";
  }
  for (const auto& [key, value] : M.action_table()) {
    const auto& [u, n, w] = key;
    out << "\n[action " << M.algebra().space().label(u) << " " << n.str() << " " << s.label(w) << "]\n";
    for (const auto& [i, c] : value.entries()) out << s.label(i) << " " << c.str() << "\n";
  }
}

}  // namespace vtx
