#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/pws.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {

const Material kAtom = Material::static_alpha(0.01);
const Material kSilicon = Material::static_eps(11.87);

double plate_alpha(const Material& m) { return m.alpha_iu(0.0).value; }

}  // namespace

TEST_CASE("static closed forms") {
  const double a = plate_alpha(kSilicon);
  for (double L : {0.5, 1.0, 4.0}) {
    CHECK(pws::pws_atom_plate(kSilicon, kAtom, L).value ==
          doctest::Approx(-(23.0 / 40.0) * a * 0.01 / std::pow(L, 4)).epsilon(1e-13));
    CHECK(pws::pws_plate_plate(kSilicon, kSilicon, L).value ==
          doctest::Approx(-(23.0 / 120.0) * a * a / std::pow(L, 3)).epsilon(1e-13));
  }
  const double R = 0.3, Lc = 2.0;
  CHECK(pws::pws_sphere_plate(kSilicon, kSilicon, Lc, R).value ==
        doctest::Approx(-(23.0 / 30.0) * pi * std::pow(R, 3) * a * a /
                        std::pow(Lc * Lc - R * R, 2))
            .epsilon(1e-12));
}

TEST_CASE("thickness factors") {
  CHECK(pws::atom_slab_thickness_factor(1.0) == doctest::Approx(1.0 - 1.0 / 16.0));
  CHECK(pws::atom_slab_thickness_factor(INFINITY) == 1.0);
  CHECK(pws::slab_slab_thickness_factor(1.0, 1.0) ==
        doctest::Approx(1.0 - 2.0 / 8.0 + 1.0 / 27.0));
  // Thin slabs scale linearly with thickness.
  const double e = 1e-5;
  CHECK(pws::atom_slab_thickness_factor(e) / e == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("slab closed forms approach the plate with growing thickness") {
  const double plate = pws::pws_plate_plate(kSilicon, kSilicon, 1.0).value;
  CHECK(pws::pws_slab_slab(kSilicon, kSilicon, 1.0, 1e6, 1e6).value ==
        doctest::Approx(plate).epsilon(1e-12));
  const double ap = pws::pws_atom_plate(kSilicon, kAtom, 1.0).value;
  CHECK(pws::pws_atom_slab(kSilicon, kAtom, 1.0, 1e5).value == doctest::Approx(ap).epsilon(1e-12));
}

TEST_CASE("oracle integration matches closed forms with dispersion") {
  const Material lor(material::LorentzEps{6.0, 2.0});
  const Material lor_atom(material::LorentzAlpha{0.01, 2.0});
  quad::QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  const geometry::Spec specs[] = {
      geometry::AtomPlate{1.3},       geometry::AtomSlab{0.7, 0.4},
      geometry::PlatePlate{2.0},      geometry::SlabSlab{1.0, 0.5, 3.0},
      geometry::SpherePlate{2.0, 0.5}, geometry::SphereSlab{1.5, 0.2, 1.0},
  };
  for (const auto& s : specs) {
    const bool atom = std::holds_alternative<geometry::AtomPlate>(s) ||
                      std::holds_alternative<geometry::AtomSlab>(s);
    const Material& b = atom ? lor_atom : lor;
    const auto closed = pws::pws_closed_form(s, lor, b, cfg);
    const auto oracle = pws::oracle_pws(s, lor, b, cfg);
    CAPTURE(geometry::name(s));
    CHECK(oracle.value == doctest::Approx(closed.value).epsilon(1e-6));
    CHECK(oracle.method == Method::PwsOracle);
  }
}

TEST_CASE("small sphere reduces to an atom of the same total polarizability") {
  const double R = 3e-4, Lc = 1.0;
  const double n_alpha = plate_alpha(kSilicon);
  const double sphere = pws::pws_sphere_plate(kSilicon, kSilicon, Lc, R).value;
  const double atom_like = (4.0 / 3.0) * pi * std::pow(R, 3) * n_alpha;
  const double ref =
      pws::pws_atom_plate(kSilicon, Material::static_alpha(atom_like), Lc).value;
  CHECK(sphere == doctest::Approx(ref).epsilon(1e-6));
}

TEST_CASE("atom-atom van der Waals") {
  const double v = pws::vdw_atom_atom(kAtom, kAtom, 2.0).value;
  CHECK(v == doctest::Approx(-23.0 * 1e-4 / (4.0 * pi * std::pow(2.0, 7))).epsilon(1e-13));
}

TEST_CASE("invalid geometry") {
  CHECK_THROWS_AS(pws::pws_atom_plate(kSilicon, kAtom, -1.0), GeometryError);
  CHECK_THROWS_AS(pws::pws_sphere_plate(kSilicon, kSilicon, 1.0, 1.0), GeometryError);
  CHECK_THROWS_AS(pws::pws_atom_slab(kSilicon, kAtom, 1.0, 0.0), GeometryError);
}
