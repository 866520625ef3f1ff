#pragma once

// Adaptive Gauss-Kronrod integration on finite, semi-infinite and wedge-shaped
// domains. Every energy integral of the library goes through these three entry
// points.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace casimir::quad {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  std::size_t max_subdivisions = 1000;
  // Rate s of the expected e^{-s x} falloff on semi-infinite ranges.
  double decay_scale = 1.0;

  void validate() const;

  QuadratureConfig with_decay_scale(double s) const {
    QuadratureConfig c = *this;
    c.decay_scale = s;
    return c;
  }
  // Configuration for an inner integral nested inside this one.
  QuadratureConfig nested() const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  std::size_t evaluations = 0;

  double tolerance(const QuadratureConfig& cfg) const;
};

// Thrown when the integrand returns NaN or infinity at an interior node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(double abscissa, const std::string& what);
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

using Integrand = std::function<double(double)>;
using Integrand2 = std::function<double(double, double)>;

IntegralResult integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureConfig& cfg = {});

// Integral over [a, inf) through x = a + t / (s (1 - t)), t in [0, 1).
IntegralResult integrate_semi_infinite(const Integrand& f, double a,
                                       const QuadratureConfig& cfg = {});

// Integral of f(u, kappa) over 0 < u < kappa < inf, evaluated as an outer
// integral in u and an inner integral in t = kappa - u, both semi-infinite
// with the same decay scale.
IntegralResult integrate_2d_wedge(const Integrand2& f,
                                  const QuadratureConfig& cfg = {});

}  // namespace casimir::quad
