// A guided tour of the library: cohomology tables, Euler numbers, pairing
// matrices, divisor Ext, dual decompositions, and the walkthrough grid.
// Build target: hpd_tour.  Writes demos output to stdout plus one SVG file.

#include <fstream>
#include <iostream>

#include "hpd/bott.hpp"
#include "hpd/chern.hpp"
#include "hpd/divisor_ext.hpp"
#include "hpd/grid.hpp"
#include "hpd/hpd_engine.hpp"
#include "hpd/kgroup.hpp"

using hpd::AmbientSpec;
namespace bott = hpd::bott;
namespace chern = hpd::chern;
namespace divext = hpd::divext;
namespace engine = hpd::engine;
namespace kgroup = hpd::kgroup;

int main() {
  std::cout << "== cohomology tables ==\n";
  std::cout << "H^*(P^3, Omega^1(2)) = "
            << bott::omega_cohomology(3, 1, 2).to_string() << '\n';
  std::cout << "H^*(P^2, O(-4))     = "
            << bott::line_cohomology(2, -4).to_string() << '\n';

  std::cout << "\n== Euler numbers ==\n";
  std::cout << "cubic fourfold in P^5:        "
            << chern::chi_top({AmbientSpec({5}), {{3}}}) << '\n';
  std::cout << "pencil base of two cubics:    "
            << chern::chi_top({AmbientSpec({5}), {{3}, {3}}}) << '\n';
  std::cout << "(1,1) divisor in P^2 x P^1:   "
            << chern::chi_top({AmbientSpec({2, 1}), {{1, 1}}})
            << "  (the plane blown up in a point)\n";

  std::cout << "\n== pairing matrix for O, O(1), O(2) on P^2 ==\n";
  auto col = kgroup::Collection::of_line_bundles(AmbientSpec({2}),
                                                 {{0}, {1}, {2}});
  for (const auto& row : kgroup::gram_matrix(col).entries) {
    for (const auto& v : row) std::cout << "  " << v;
    std::cout << '\n';
  }

  std::cout << "\n== Ext on the universal (3,1) divisor over P^5 ==\n";
  divext::DivisorGeometry g{5, 3, 2};
  divext::ExtAnswer canonical =
      divext::ext_on_divisor(g, {0, 0}, divext::canonical_twist(g));
  std::cout << "pairing into the canonical twist: table "
            << canonical.table.to_string() << ", euler " << canonical.euler
            << '\n';

  std::cout << "\n== dual decompositions ==\n";
  engine::SODReport cubic = engine::hpd2_decomposition(5, 3, 1);
  std::cout << "cubic fourfold: residual rank "
            << cubic.scalars.at("hpd_rank") << " (a K3 surface's chi is "
            << chern::chi_top({AmbientSpec({3}), {{4}}}) << ")\n";
  engine::SODReport pencil = engine::hpd2_decomposition(5, 3, 2);
  std::cout << "pencil of cubics: both sides give "
            << pencil.scalars.at("hpd_rank")
            << (pencil.calabi_yau.value_or(false) ? ", Calabi-Yau\n" : "\n");

  std::cout << "\n== mutation walkthrough for a length-3 chain ==\n";
  engine::GridState walk = engine::mutation_walkthrough(3, 3);
  std::cout << hpd::grid::walkthrough_ascii(walk);
  std::cout << (walk.all_certified ? "every skip certified\n"
                                   : "certification FAILED\n");

  std::ofstream svg("walkthrough.svg");
  svg << hpd::grid::walkthrough_svg(walk);
  std::cout << "wrote walkthrough.svg\n";
  return 0;
}
