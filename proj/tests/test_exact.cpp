#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/exact.hpp"
#include "casimir/pws.hpp"

using namespace casimir;
using namespace casimir::exact;

namespace {

const Material kAtom = Material::static_alpha(0.01);

quad::QuadratureConfig tight() {
  quad::QuadratureConfig c;
  c.rel_tol = 1e-11;
  return c;
}

}  // namespace

TEST_CASE("bulk Fresnel coefficients") {
  const WaveParams w{1.0, 2.0};
  const double s5 = std::sqrt(5.0);
  CHECK(fresnel_bulk(2.0, w, Polarization::TE) == doctest::Approx((2.0 - s5) / (2.0 + s5)));
  CHECK(fresnel_bulk(1.0, w, Polarization::TE) == 0.0);
  CHECK(fresnel_bulk(1.0, w, Polarization::TM) == 0.0);
  const double inf = INFINITY;
  CHECK(fresnel_bulk(inf, w, Polarization::TE) == -1.0);
  CHECK(fresnel_bulk(inf, w, Polarization::TM) == -1.0);
  for (double eps : {1.5, 11.87, 1e6}) {
    CHECK(std::abs(fresnel_bulk(eps, w, Polarization::TE)) < 1.0);
    CHECK(std::abs(fresnel_bulk(eps, w, Polarization::TM)) < 1.0);
  }
  CHECK_THROWS_AS((WaveParams{2.0, 1.0}.validate()), std::domain_error);
}

TEST_CASE("slab coefficients") {
  const WaveParams w{0.7, 1.3};
  for (auto p : {Polarization::TE, Polarization::TM}) {
    CHECK(slab_reflection_exact(4.0, w, 1e4, p) ==
          doctest::Approx(fresnel_bulk(4.0, w, p)).epsilon(1e-12));
    CHECK(std::abs(slab_reflection_exact(4.0, w, 1e-12, p)) < 1e-10);
  }
}

TEST_CASE("summed coefficient agrees with the exact slab in the dilute limit") {
  const Material dilute = Material::static_alpha(1e-7);
  const double eps = eps_from_alpha_cm({1e-7}, 1.0);
  for (double u : {0.01, 1.0, 30.0}) {
    for (double q : {1.0, 2.0, 20.0}) {
      const WaveParams w{u, q * u};
      for (auto p : {Polarization::TE, Polarization::TM}) {
        const double summed = slab_reflection_summed(dilute, w, 1.0, p);
        const double ex = slab_reflection_exact(eps, w, 1.0, p);
        if (summed == 0.0) continue;
        CHECK(ex == doctest::Approx(summed).epsilon(1e-3));
      }
    }
  }
}

TEST_CASE("exact energies against high-precision references") {
  const auto c = tight();
  const auto s2 = Material::static_eps(2.0), si = Material::static_eps(11.87);
  CHECK(exact_atom_plate(kAtom, s2, 1.0, c).value ==
        doctest::Approx(-0.00030269542427020105).epsilon(1e-9));
  CHECK(exact_atom_plate(kAtom, si, 1.0, c).value ==
        doctest::Approx(-0.00081537814456709406).epsilon(1e-9));
  CHECK(exact_atom_plate(kAtom, s2, 3.0, c).value ==
        doctest::Approx(-3.7369805465456919842e-6).epsilon(1e-9));
  CHECK(exact_plate_plate(s2, 1.0, c).value ==
        doctest::Approx(-0.00053497277343655982).epsilon(1e-9));
  CHECK(exact_plate_plate(si, 1.0, c).value ==
        doctest::Approx(-0.0041738269898531248).epsilon(1e-9));
}

TEST_CASE("perfect-mirror Casimir limits") {
  const auto pm = Material::perfect_mirror();
  const double pi = std::numbers::pi;
  for (double L : {1.0, 3.0}) {
    CHECK(exact_plate_plate(pm, L).value ==
          doctest::Approx(-pi * pi / (720.0 * std::pow(L, 3))).epsilon(1e-8));
    CHECK(exact_atom_plate(kAtom, pm, L).value ==
          doctest::Approx(-3.0 * 0.01 / (8.0 * pi * std::pow(L, 4))).epsilon(1e-8));
  }
}

TEST_CASE("single round trip versus full sum") {
  const auto pm = Material::perfect_mirror();
  const double zeta4 = std::pow(std::numbers::pi, 4) / 90.0;
  const double ratio =
      exact_plate_plate_single_roundtrip(pm, 1.0).value / exact_plate_plate(pm, 1.0).value;
  CHECK(ratio == doctest::Approx(1.0 / zeta4).epsilon(1e-8));
  const auto weak = Material::static_eps(2.0);
  const double r2 =
      exact_plate_plate_single_roundtrip(weak, 1.0).value / exact_plate_plate(weak, 1.0).value;
  CHECK(r2 < 1.0);
  CHECK(r2 > 0.99);
}

TEST_CASE("summed reflection reproduces the pairwise energy") {
  const Material lor(material::LorentzEps{4.0, 2.0});
  for (const Material& m : {Material::static_eps(4.0), lor}) {
    const auto via = pws_via_reflection(m, kAtom, 1.2, 0.8);
    const auto closed = pws::pws_atom_slab(m, kAtom, 1.2, 0.8);
    CHECK(via.value == doctest::Approx(closed.value).epsilon(1e-8));
  }
}

TEST_CASE("thin slab first order coefficients are the slopes at zero thickness") {
  const Material m = Material::static_alpha(0.01);
  const double eps = eps_from_alpha_cm({0.01}, 1.0);
  const WaveParams w{0.5, 1.5};
  const double h = 1e-6;
  for (auto p : {Polarization::TE, Polarization::TM}) {
    const double summed = thin_slab_first_order(ThinSlabSource::Summed, m, w, h, p);
    const double slope_s = (4.0 * slab_reflection_summed(m, w, h, p) -
                            slab_reflection_summed(m, w, 2.0 * h, p)) / 2.0;
    CHECK(summed == doctest::Approx(slope_s).epsilon(1e-8));
    const double exact = thin_slab_first_order(ThinSlabSource::Exact, m, w, h, p);
    const double slope_e = (4.0 * slab_reflection_exact(eps, w, h, p) -
                            slab_reflection_exact(eps, w, 2.0 * h, p)) / 2.0;
    CHECK(exact == doctest::Approx(slope_e).epsilon(1e-8));
  }
}

TEST_CASE("dispatch") {
  const auto s2 = Material::static_eps(2.0);
  CHECK(exact_energy(geometry::AtomPlate{1.0}, s2, kAtom).value ==
        doctest::Approx(exact_atom_plate(kAtom, s2, 1.0).value));
  CHECK(exact_energy(geometry::PlatePlate{1.0}, s2, s2).per_unit == PerUnit::PerArea);
  CHECK_THROWS_AS(exact_energy(geometry::SpherePlate{2.0, 0.5}, s2, s2), GeometryError);
  CHECK_THROWS_AS(exact_energy(geometry::AtomAtom{1.0}, kAtom, kAtom), GeometryError);
  // Slab results approach the plate.
  CHECK(exact_slab_slab(s2, 1.0, 200.0, 200.0).value ==
        doctest::Approx(exact_plate_plate(s2, 1.0).value).epsilon(1e-6));
}
