#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "casimir/materials.hpp"

using namespace casimir;

TEST_CASE("Clausius-Mossotti round trip") {
  for (double n : {0.5, 1.0, 7.0}) {
    for (double eps : {1.0, 1.5, 11.87, 1e4}) {
      const auto a = alpha_from_eps_cm(eps, n);
      CHECK(eps_from_alpha_cm(a, n) == doctest::Approx(eps).epsilon(1e-12));
    }
  }
  CHECK(alpha_from_eps_cm(1.0, 1.0).value == 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(alpha_from_eps_cm(inf, 2.0).value == doctest::Approx(3.0 / (8.0 * std::numbers::pi)));
}

TEST_CASE("polarization catastrophe and invalid input") {
  const double critical = 3.0 / (4.0 * std::numbers::pi);
  CHECK_THROWS_AS(eps_from_alpha_cm({critical * 1.01}, 1.0), PolarizationCatastrophe);
  CHECK_THROWS_AS(alpha_from_eps_cm(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(alpha_from_eps_cm(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(Material::static_eps(0.9), std::domain_error);
  CHECK_THROWS_AS(Material::static_alpha(-1.0), std::domain_error);
  CHECK_THROWS_AS(Material(material::LorentzEps{2.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(Material::perfect_mirror(-1.0), std::domain_error);
}

TEST_CASE("dilute limit agrees to first order") {
  const double a = 1e-6;
  const double exact = eps_from_alpha_cm({a}, 1.0);
  const double first = eps_dilute_first_order({a}, 1.0);
  CHECK(std::abs(exact - first) < 1e-10);
}

TEST_CASE("frequency dependence") {
  const Material lor(material::LorentzEps{5.0, 2.0});
  CHECK(lor.eps_iu(0.0) == doctest::Approx(5.0));
  CHECK(lor.eps_iu(2.0) == doctest::Approx(3.0));
  CHECK(lor.eps_iu(1e6) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(lor.is_static());

  const Material la(material::LorentzAlpha{0.01, 1.0});
  CHECK(la.alpha_iu(1.0).value == doctest::Approx(0.005));

  const Material st = Material::static_eps(3.0);
  CHECK(st.is_static());
  CHECK(st.eps_iu(1e3) == 3.0);
  CHECK(st.alpha_iu(7.0).value == doctest::Approx(alpha_from_eps_cm(3.0, 1.0).value));
}

TEST_CASE("static limit of dispersive models") {
  const Material lor(material::LorentzEps{5.0, 2.0}, 2.0);
  const Material s = lor.static_limit();
  CHECK(s.is_static());
  CHECK(s.n_v() == 2.0);
  CHECK(s.eps_iu(10.0) == doctest::Approx(5.0));
  const Material la(material::LorentzAlpha{0.02, 1.0});
  CHECK(la.static_limit().alpha_iu(100.0).value == doctest::Approx(0.02));
}

TEST_CASE("perfect mirror") {
  const Material pm = Material::perfect_mirror();
  CHECK(pm.is_perfect_mirror());
  CHECK(std::isinf(pm.eps_iu(1.0)));
  CHECK(pm.alpha_iu(1.0).value == doctest::Approx(3.0 / (4.0 * std::numbers::pi)));
  CHECK_FALSE(pm.describe().empty());
}
