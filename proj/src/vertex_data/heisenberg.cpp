#include "vtx/vertex_data/heisenberg.hpp"

#include <memory>

namespace vtx {

std::string heisenberg_label(const FockOracle::State& s) {
  std::string out;
  for (auto k : s) out += "a(-" + std::to_string(k) + ")";
  return out + "1";
}

FockOracle::State heisenberg_state(const std::string& label) {
  FockOracle::State s;
  std::size_t pos = 0;
  while (label.compare(pos, 3, "a(-") == 0) {
    const std::size_t close = label.find(')', pos);
    if (close == std::string::npos) throw ParseError("bad Heisenberg label " + label);
    s.push_back(std::stoll(label.substr(pos + 3, close - pos - 3)));
    pos = close + 1;
  }
  if (label.substr(pos) != "1") throw ParseError("bad Heisenberg label " + label);
  return s;
}

TruncatedVertexAlgebra build_heisenberg(int64_t cutoff, bool lazy) {
  auto oracle_ptr = std::make_shared<FockOracle>(1, Rational(0));
  auto space = std::make_shared<GradedSpace>();
  std::vector<FockOracle::State> states;
  std::map<FockOracle::State, std::size_t> index;
  for (int64_t w = 0; w <= cutoff; ++w)
    for (auto& s : oracle_ptr->states_of_degree(ScaledExponent(w))) {
      index[s] = space->add_basis(ScaledExponent(w), heisenberg_label(s));
      states.push_back(s);
    }
  std::optional<GradedVector> omega;
  if (cutoff >= 2) omega = GradedVector::basis(index.at({1, 1}), Rational(1, 2));
  TruncatedVertexAlgebra V(space, cutoff, GradedVector::basis(index.at({})), omega);
  auto entry = [oracle_ptr, states, index](std::size_t u, int64_t n, std::size_t v) {
    GradedVector value;
    for (const auto& [st, c] : oracle_ptr->field_mode(states[u], ScaledExponent(n), states[v])) value.add(index.at(st), c);
    return value;
  };
  if (lazy) {
    V.set_source(entry);
    V.check_axioms();
    return V;
  }
  for (std::size_t u = 0; u < states.size(); ++u)
    for (std::size_t v = 0; v < states.size(); ++v) {
      const int64_t s = V.weight(u) + V.weight(v);
      for (int64_t n = s - 1 - cutoff; n <= s - 1; ++n) {
        V.set_mode(u, n, v, entry(u, n, v));
      }
    }
  V.check_axioms();
  return V;
}

Automorphism heisenberg_parity(const TruncatedVertexAlgebra& V) {
  Automorphism g{2, {}};
  for (std::size_t i = 0; i < V.dim(); ++i)
    g.labels.push_back(static_cast<int64_t>(heisenberg_state(V.space().label(i)).size() % 2));
  return g;
}

}  // namespace vtx
