#pragma once

#include "vtx/cli/report.hpp"

#include <optional>
#include <string>

namespace vtx {

/// Command-line names: check-algebra, zhu, induce, verify-thm21 (residue formulas and
/// admissibility of a module), verify-corollaries, verify-universal.
enum class Command { CheckAlgebra, Zhu, Induce, VerifyResidue, VerifyCorollaries, VerifyUniversal };

/// Parses a command name; std::nullopt for anything else.
std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::CheckAlgebra;
  /// A spec file, or "heisenberg:C" for the built-in Heisenberg algebra of cutoff C.
  std::string algebra;
  /// A module spec file, "fock:LAMBDA" for the Fock module of momentum LAMBDA,
  /// or "fock-twisted" for the module twisted by a -> -a. Built-in modules
  /// need the built-in algebra and are tabulated up to the cutoff.
  std::string module;
  std::optional<int64_t> level;
  /// "algebra" takes the automorphism from the algebra document, "parity" is
  /// a -> -a on the built-in Heisenberg algebra.
  std::optional<std::string> twist;
  /// Degree cutoff for modules; weight cap for the Zhu quotient.
  std::optional<std::string> cutoff;
  int64_t action_weight = 2;
  std::uint64_t seed = 1;
  std::size_t exhaustive_limit = 0;
  bool structured = false;
  bool tables = false;
};

struct RunResult {
  /// 0 all checks pass, 1 a check failed, 2 parse or usage error, 3 precision abort.
  int status = 0;
  std::string output;
};

RunResult run(const RunConfig& config);

}  // namespace vtx
