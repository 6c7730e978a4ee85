#include "vtx/vertex_data/spec_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace vtx {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::size_t lookup(const GradedSpace& space, const std::string& label, int line) {
  const std::size_t i = space.find(label);
  if (i == space.dim()) throw ParseError("unknown basis label '" + label + "'", line);
  return i;
}

int64_t parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("not an integer: " + s, line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: " + s, line);
  }
}

Rational parse_rational(const std::string& s, int line) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw ParseError("not a rational: " + s, line);
  }
}

}  // namespace

std::vector<SpecSection> parse_sections(std::istream& in) {
  std::vector<SpecSection> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    const std::string line = raw.substr(first, last - first + 1);
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      SpecSection sec;
      sec.header = split(line.substr(1, line.size() - 2));
      if (sec.header.empty()) throw ParseError("empty section header", line_no);
      sec.header_line = line_no;
      out.push_back(std::move(sec));
      continue;
    }
    if (out.empty()) throw ParseError("content before the first section", line_no);
    out.back().lines.push_back(split(line));
    out.back().line_numbers.push_back(line_no);
  }
  return out;
}

GradedVector parse_coordinates(const SpecSection& sec, const GradedSpace& space) {
  GradedVector v;
  for (std::size_t i = 0; i < sec.lines.size(); ++i) {
    const auto& toks = sec.lines[i];
    const int ln = sec.line_numbers[i];
    if (toks.size() != 2) throw ParseError("expected 'label coefficient'", ln);
    v.add(lookup(space, toks[0], ln), parse_rational(toks[1], ln));
  }
  return v;
}

AlgebraSpec load_algebra(std::istream& in) {
  const auto sections = parse_sections(in);
  auto space = std::make_shared<GradedSpace>();
  std::optional<int64_t> cutoff;
  int64_t max_weight = 0;
  bool have_space = false;
  for (const auto& sec : sections) {
    if (sec.header[0] != "space") continue;
    if (have_space) throw ParseError("duplicate [space] section", sec.header_line);
    have_space = true;
    for (std::size_t i = 0; i < sec.lines.size(); ++i) {
      const auto& t = sec.lines[i];
      const int ln = sec.line_numbers[i];
      if (t.size() == 2 && t[0] == "cutoff") {
        cutoff = parse_int(t[1], ln);
        continue;
      }
      if (t.size() < 3 || t[0] != "weight" || t[2] != ":")
        throw ParseError("expected 'weight N : label ...'", ln);
      const int64_t w = parse_int(t[1], ln);
      if (w < 0) throw ParseError("negative weight", ln);
      max_weight = std::max(max_weight, w);
      for (std::size_t j = 3; j < t.size(); ++j) {
        if (space->find(t[j]) != space->dim()) throw ParseError("duplicate label " + t[j], ln);
        space->add_basis(ScaledExponent(w), t[j]);
      }
    }
  }
  if (!have_space) throw ParseError("missing [space] section");
  const int64_t cut = cutoff.value_or(max_weight);
  if (cut < max_weight) throw ParseError("cutoff below the largest weight");

  std::optional<GradedVector> vacuum, omega;
  std::optional<Automorphism> g;
  for (const auto& sec : sections) {
    if (sec.header[0] == "vacuum") vacuum = parse_coordinates(sec, *space);
    else if (sec.header[0] == "omega") omega = parse_coordinates(sec, *space);
  }
  if (!vacuum) throw ParseError("missing [vacuum] section");
  TruncatedVertexAlgebra V(space, cut, *vacuum, omega);

  for (const auto& sec : sections) {
    const auto& h = sec.header;
    if (h[0] == "space" || h[0] == "vacuum" || h[0] == "omega") continue;
    if (h[0] == "mode") {
      if (h.size() != 4) throw ParseError("expected [mode u n v]", sec.header_line);
      const std::size_t u = lookup(*space, h[1], sec.header_line);
      const std::size_t v = lookup(*space, h[3], sec.header_line);
      const int64_t n = parse_int(h[2], sec.header_line);
      if (V.mode_table().count({u, n, v}))
        throw ParseError("duplicate mode entry", sec.header_line);
      V.set_mode(u, n, v, parse_coordinates(sec, *space));
    } else if (h[0] == "automorphism") {
      Automorphism a{1, std::vector<int64_t>(space->dim(), 0)};
      bool have_order = false;
      for (std::size_t i = 0; i < sec.lines.size(); ++i) {
        const auto& t = sec.lines[i];
        const int ln = sec.line_numbers[i];
        if (t.size() != 2) throw ParseError("expected 'order T' or 'label r'", ln);
        if (t[0] == "order") {
          a.order = parse_int(t[1], ln);
          have_order = true;
        } else {
          a.labels[lookup(*space, t[0], ln)] = parse_int(t[1], ln);
        }
      }
      if (!have_order) throw ParseError("automorphism without order", sec.header_line);
      g = std::move(a);
    } else {
      throw ParseError("unknown section [" + h[0] + "]", sec.header_line);
    }
  }
  V.check_axioms();
  if (g) check_automorphism(V, *g);
  return {std::move(V), std::move(g)};
}

AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_algebra(in);
}

void write_algebra(std::ostream& out, const TruncatedVertexAlgebra& V, const std::optional<Automorphism>& g) {
  const GradedSpace& s = V.space();
  auto coords = [&](const GradedVector& v) {
    for (const auto& [i, c] : v.entries()) out << s.label(i) << " " << c.str() << "\n";
  };
  out << "[space]\ncutoff " << V.cutoff() << "\n";
  for (const auto& [d, idx] : s.components()) {
    out << "weight " << d.str() << " :";
    for (auto i : idx) out << " " << s.label(i);
    out << "\n";
  }
  out << "\n[vacuum]\n";
  coords(V.vacuum());
  if (V.conformal()) {
    out << "\n[omega]\n";
    coords(*V.conformal());
  }
  V.materialize();
  for (const auto& [key, value] : V.mode_table()) {
    const auto& [u, n, v] = key;
    out << "\n[mode " << s.label(u) << " " << n << " " << s.label(v) << "]\n";
    coords(value);
  }
  if (g) {
    out << "\n[automorphism]\norder " << g->order << "\n";
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (g->label(i) != 0) out << s.label(i) << " " << g->label(i) << "\n";
  }
}

}  // namespace vtx
