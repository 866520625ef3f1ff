#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/ratios.hpp"

using namespace casimir;
using namespace casimir::ratios;

TEST_CASE("atom-plate long-range ratio") {
  CHECK(*ratio_atom_plate_lr(11.87).ratio == doctest::Approx(1.31939019).epsilon(1e-7));
  CHECK(*ratio_atom_plate_lr(1e10).ratio == doctest::Approx(1.15001437).epsilon(1e-7));
  CHECK(*ratio_atom_plate_lr(Material::perfect_mirror()).ratio ==
        doctest::Approx(1.15).epsilon(1e-8));
  const auto one = ratio_atom_plate_lr(1.0);
  CHECK(one.by_continuity);
  CHECK(*one.ratio == 1.0);
}

TEST_CASE("plate-plate long-range ratio") {
  const double pm = 621.0 / (8.0 * std::pow(std::numbers::pi, 4));
  CHECK(*ratio_plate_plate_lr(Material::perfect_mirror()).ratio ==
        doctest::Approx(pm).epsilon(1e-8));
  CHECK(*ratio_plate_plate_lr(1e10).ratio == doctest::Approx(0.797089).epsilon(1e-5));
  CHECK(*ratio_plate_plate_lr(900.0).ratio > 1.0);
  CHECK(*ratio_plate_plate_lr(970.0).ratio < 1.0);
}

TEST_CASE("ratios do not depend on the gap or the number density") {
  const double base = *ratio_plate_plate_lr(7.0).ratio;
  CHECK(*ratio_plate_plate_lr(7.0, RatioOptions{.L = 3.0}).ratio ==
        doctest::Approx(base).epsilon(1e-8));
  CHECK(*ratio_plate_plate_lr(7.0, RatioOptions{.n_v = 5.0}).ratio ==
        doctest::Approx(base).epsilon(1e-8));
}

TEST_CASE("thick slabs approach the bulk ratio") {
  const double bulk = *ratio_atom_plate_lr(30.0).ratio;
  CHECK(*ratio_atom_slab_lr(30.0, 1e3).ratio == doctest::Approx(bulk).epsilon(1e-4));
  const double pbulk = *ratio_plate_plate_lr(30.0).ratio;
  CHECK(*ratio_slab_slab_lr(30.0, 1e3).ratio == doctest::Approx(pbulk).epsilon(1e-4));
}

TEST_CASE("sphere limits") {
  CHECK(small_sphere_perfect_mirror_ratio() == doctest::Approx(23.0 / 30.0).epsilon(1e-6));
  const auto far = ratio_sphere_pws_limits(Material::perfect_mirror(), 1e4);
  REQUIRE(far.ratio);
  const auto mid = ratio_sphere_pws_limits(Material::perfect_mirror(), 1.0);
  CHECK_FALSE(mid.ratio);
}

TEST_CASE("grids, scans and parallel evaluation") {
  const auto g = log_grid(1.0, 100.0, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g.back() == 100.0);
  CHECK(log_grid(2.0, 3.0, 1).size() == 1);
  CHECK(log_grid(2.0, 3.0, 0).empty());

  const auto xs = std::vector<double>{1, 2, 3, 4};
  const auto ys = std::vector<double>{0.5, 1.5, 1.2, 0.8};
  const auto sc = sign_changes(xs, ys, 1.0);
  REQUIRE(sc.size() == 2);
  CHECK(sc[0] == std::pair{1.0, 2.0});
  CHECK(sc[1] == std::pair{3.0, 4.0});

  const auto pts = parallel_map(
      16, [](std::size_t i) { return ratio_atom_plate_lr(2.0 + static_cast<double>(i)); }, 4);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(pts[i].eps0 == 2.0 + static_cast<double>(i));
  CHECK_THROWS_AS(parallel_map(
                      4,
                      [](std::size_t i) -> RatioPoint {
                        if (i == 2) throw std::runtime_error("boom");
                        return {};
                      },
                      2),
                  std::runtime_error);
}

TEST_CASE("extremum search") {
  const auto e = find_extremum([](double x) { return -(x - 3.0) * (x - 3.0); }, 1.0, 10.0, 1e-8);
  CHECK(e.x == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(e.value == doctest::Approx(0.0));
  CHECK_THROWS_AS(find_extremum([](double x) { return x; }, 1.0, 10.0), BracketError);
  const auto pp = find_extremum([](double x) { return *ratio_plate_plate_lr(x).ratio; }, 2.0, 100.0);
  CHECK(pp.x == doctest::Approx(9.4635).epsilon(1e-3));
  CHECK(pp.value == doctest::Approx(1.61375).epsilon(1e-5));
}
