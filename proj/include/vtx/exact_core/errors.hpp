#pragma once

#include <stdexcept>
#include <string>

namespace vtx {

/// A computation needed a coefficient, mode or degree that lies outside the
/// certified range (series window, algebra cutoff, module cutoff).
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Structure data violates an axiom (vacuum, creation, grading, ...).
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vtx
