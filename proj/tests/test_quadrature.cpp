#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "casimir/quadrature.hpp"

using namespace casimir::quad;

TEST_CASE("finite interval polynomials and endpoint singularities") {
  const auto r = integrate_finite([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.converged);

  const auto s = integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite decay with algebraic prefactor") {
  QuadratureConfig cfg;
  for (double L : {0.1, 1.0, 30.0}) {
    const auto r = integrate_semi_infinite(
        [L](double u) { return u * u * u * std::exp(-2.0 * u * L); }, 0.0,
        cfg.with_decay_scale(2.0 * L));
    const double want = 6.0 / std::pow(2.0 * L, 4);
    CHECK(r.value == doctest::Approx(want).epsilon(1e-12));
    CHECK(r.converged);
  }
  const auto shifted = integrate_semi_infinite([](double x) { return std::exp(-x); }, 3.0);
  CHECK(shifted.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-13));
}

TEST_CASE("wedge 0 < u < kappa") {
  const auto a = integrate_2d_wedge([](double, double k) { return std::exp(-k); });
  CHECK(a.value == doctest::Approx(1.0).epsilon(1e-12));
  const auto b = integrate_2d_wedge([](double u, double k) { return std::exp(-u - k); });
  CHECK(b.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.converged);
  CHECK(b.evaluations > 0);
}

TEST_CASE("non-finite integrand reports its abscissa") {
  try {
    integrate_finite([](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x; },
                     0.0, 1.0);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.abscissa() > 0.5);
    CHECK(e.abscissa() <= 1.0);
  }
}

TEST_CASE("subdivision budget exhaustion is flagged, not thrown") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 1;
  const auto r = integrate_finite([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, cfg);
  CHECK_FALSE(r.converged);
}

TEST_CASE("configuration validation") {
  QuadratureConfig cfg;
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 0.0, 1.0, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 1.0, 0.0), std::invalid_argument);
  QuadratureConfig bad_scale;
  bad_scale.decay_scale = -1.0;
  CHECK_THROWS(bad_scale.validate());
  QuadratureConfig fine;
  fine.rel_tol = 1e-20;
  CHECK(fine.nested().rel_tol == doctest::Approx(1e-14));
}

TEST_CASE("concurrent calls agree") {
  auto f = [](double u) { return u * u * std::exp(-u) / (1.0 + u); };
  const double reference = integrate_semi_infinite(f, 0.0).value;
  std::vector<double> results(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < results.size(); ++i)
      pool.emplace_back([&, i] { results[i] = integrate_semi_infinite(f, 0.0).value; });
  }
  for (double r : results) CHECK(r == reference);
}
