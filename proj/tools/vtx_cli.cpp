#include "vtx/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for truncated vertex algebras, Zhu algebras and induced modules"};
  std::string command, format = "text", level;
  vtx::RunConfig cfg;
  std::string twist, cutoff;
  app.add_option("command", command,
                 "check-algebra | zhu | induce | verify-thm21 | verify-corollaries | verify-universal")
      ->required();
  app.add_option("--algebra", cfg.algebra, "algebra spec file or heisenberg:C")->required();
  app.add_option("--module", cfg.module, "module spec file, fock:LAMBDA or fock-twisted");
  auto* lev = app.add_option("--level", level, "level n of the Zhu algebra A_n");
  auto* tw = app.add_option("--twist", twist, "algebra | parity");
  lev->excludes(tw);
  auto* cut = app.add_option("--cutoff", cutoff, "module degree cutoff D (e.g. 4 or 5/2); weight cap for zhu");
  app.add_option("--action-weight", cfg.action_weight, "weight of the acting algebra of induced modules");
  app.add_option("--seed", cfg.seed, "seed for sampled Jacobi tuples");
  app.add_option("--exhaustive-limit", cfg.exhaustive_limit, "enumerate Jacobi windows up to this many tuples");
  app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--tables", cfg.tables, "include tables in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const auto cmd = vtx::parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command " << command << "\n";
    return 2;
  }
  cfg.command = *cmd;
  try {
    if (*lev) cfg.level = std::stoll(level);
  } catch (const std::exception&) {
    std::cerr << "bad level " << level << "\n";
    return 2;
  }
  if (*tw) cfg.twist = twist;
  if (*cut) cfg.cutoff = cutoff;
  cfg.structured = format == "structured";

  const vtx::RunResult r = vtx::run(cfg);
  (r.status == 2 || r.status == 3 ? std::cerr : std::cout) << r.output;
  return r.status;
}
