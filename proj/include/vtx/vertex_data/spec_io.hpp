#pragma once

#include "vtx/vertex_data/algebra.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vtx {

/// One bracketed section of a spec document: the header split on
/// whitespace and the non-empty body lines, each split on whitespace.
struct SpecSection {
  std::vector<std::string> header;
  int header_line = 0;
  std::vector<std::vector<std::string>> lines;
  std::vector<int> line_numbers;
};

/// Splits a document into sections. '#' starts a comment. Lines before the
/// first header are a ParseError.
std::vector<SpecSection> parse_sections(std::istream& in);

/// Parses "label coeff" lines into a vector over `space`.
GradedVector parse_coordinates(const SpecSection& sec, const GradedSpace& space);

struct AlgebraSpec {
  TruncatedVertexAlgebra algebra;
  std::optional<Automorphism> automorphism;
};

/// Reads an algebra document and verifies every axiom (AxiomError on failure).
AlgebraSpec load_algebra(std::istream& in);
AlgebraSpec load_algebra_file(const std::string& path);

/// Writes a document that load_algebra reads back to an identical algebra.
void write_algebra(std::ostream& out, const TruncatedVertexAlgebra& V, const std::optional<Automorphism>& g);

}  // namespace vtx
