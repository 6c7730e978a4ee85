// Writes the Heisenberg algebra and one of its Fock modules as spec documents.
#include "vtx/residue_identities/module_data.hpp"
#include "vtx/vertex_data/heisenberg.hpp"
#include "vtx/vertex_data/spec_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

int main(int argc, char** argv) {
  CLI::App app{"Write Heisenberg and Fock module spec files"};
  int64_t cutoff = 4;
  std::string degree = "2", momentum = "0", algebra_out, module_out;
  bool twisted = false;
  app.add_option("--algebra-cutoff", cutoff, "weight cutoff of the algebra");
  app.add_option("--degree", degree, "degree cutoff of the module");
  app.add_option("--momentum", momentum, "momentum of the untwisted module");
  app.add_flag("--twisted", twisted, "module twisted by a -> -a; the algebra document records the automorphism");
  app.add_option("--algebra-out", algebra_out)->required();
  app.add_option("--module-out", module_out);
  CLI11_PARSE(app, argc, argv);

  auto V = std::make_shared<const vtx::TruncatedVertexAlgebra>(vtx::build_heisenberg(cutoff));
  const vtx::Automorphism g = twisted ? vtx::heisenberg_parity(*V) : vtx::Automorphism::identity(V->dim());
  std::ofstream a(algebra_out);
  vtx::write_algebra(a, *V, twisted ? std::optional<vtx::Automorphism>(g) : std::nullopt);
  if (module_out.empty()) return 0;
  vtx::FockOracle F(twisted ? 2 : 1, twisted ? vtx::Rational(0) : vtx::Rational::parse(momentum));
  const vtx::ModuleData M = vtx::build_fock_module(V, g, F, vtx::ScaledExponent::parse(degree));
  std::ofstream m(module_out);
  vtx::write_module(m, M);
  return 0;
}
