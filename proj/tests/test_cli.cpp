#include "doctest.h"

#include "vtx/cli/run.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <sstream>

using namespace vtx;

namespace {

RunConfig config(Command c, const std::string& algebra) {
  RunConfig cfg;
  cfg.command = c;
  cfg.algebra = algebra;
  return cfg;
}

const std::string data(const std::string& name) { return std::string(VTX_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check-algebra on the vacuum-only algebra") {
  const RunResult r = run(config(Command::CheckAlgebra, data("vacuum_only.alg")));
  CHECK(r.status == 0);
  CHECK(r.output.find("result: pass") != std::string::npos);
}

TEST_CASE("verify-thm21 reports a mutated structure constant") {
  RunConfig cfg = config(Command::VerifyResidue, data("heisenberg4.alg"));
  cfg.module = data("fock_2.mod");
  CHECK(run(cfg).status == 0);
  cfg.module = data("fock_2_mutated.mod");
  const RunResult bad = run(cfg);
  CHECK(bad.status == 1);
  // The residue witness names the (p, q) pair.
  const auto pos = bad.output.find("witness: truncation identity");
  REQUIRE(pos != std::string::npos);
  CHECK(bad.output.find(" p=", pos) != std::string::npos);
  CHECK(bad.output.find(" q=", pos) != std::string::npos);
}

TEST_CASE("induce reports partition dimensions") {
  RunConfig cfg = config(Command::Induce, "heisenberg:12");
  cfg.module = "fock:3/2";
  cfg.level = 0;
  cfg.cutoff = "4";
  cfg.structured = true;
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.output);
  std::istringstream dims(j["info"]["graded dims"].get<std::string>());
  int64_t d = 0;
  for (int64_t x; dims >> x; ++d) CHECK(x == oracle::partitions(d));
  CHECK(d == 5);
  CHECK(j["result"] == "pass");
  CHECK(!j["tables"]["actions"].empty());
}

TEST_CASE("exit statuses") {
  CHECK(run(config(Command::CheckAlgebra, data("missing.alg"))).status == 2);
  RunConfig both = config(Command::Zhu, "heisenberg:3");
  both.level = 0;
  both.twist = "parity";
  CHECK(run(both).status == 2);
  RunConfig deep = config(Command::Induce, "heisenberg:4");
  deep.module = "fock:1";
  deep.level = 0;
  deep.cutoff = "4";
  CHECK(run(deep).status == 3);
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg = config(Command::VerifyResidue, data("heisenberg3_parity.alg"));
  cfg.module = data("fock_twisted.mod");
  cfg.twist = "algebra";
  cfg.seed = 7;
  cfg.structured = true;
  const RunResult a = run(cfg), b = run(cfg);
  CHECK(a.status == 0);
  CHECK(a.output == b.output);

  RunConfig z = config(Command::Zhu, "heisenberg:4");
  z.level = 1;
  z.tables = true;
  CHECK(run(z).output == run(z).output);
}

TEST_CASE("exhaustive Jacobi mode covers the whole window") {
  RunConfig cfg = config(Command::VerifyResidue, data("heisenberg4.alg"));
  cfg.module = data("fock_2.mod");
  cfg.exhaustive_limit = 1000000;
  cfg.structured = true;
  const auto j = nlohmann::json::parse(run(cfg).output);
  for (const auto& c : j["checks"])
    if (c["check-id"] == "jacobi") {
      CHECK(c["status"] == "pass");
      CHECK(c["pass"].get<int>() > 200);
    }
}
