#include "casimir/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace casimir::quad {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// Wraps the user integrand: counts calls and rejects non-finite values.
class CheckedIntegrand {
 public:
  CheckedIntegrand(const Integrand& f, std::size_t& counter)
      : f_(f), counter_(counter) {}

  double operator()(double x) const {
    ++counter_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "integrand is not finite (" << y << ") at x = " << x;
      throw EvaluationError(x, os.str());
    }
    return y;
  }

 private:
  const Integrand& f_;
  std::size_t& counter_;
};

template <class F>
Panel evaluate_panel(const F& f, double a, double b) {
  double err = 0.0;
  double l1 = 0.0;
  const double v = Rule::integrate(f, a, b, 0, 0.0, &err, &l1);
  return {a, b, v, err};
}

// Global adaptive bisection: always split the panel with the largest error.
template <class F>
IntegralResult adaptive(const F& f, double a, double b,
                        const QuadratureConfig& cfg, std::size_t& evals) {
  std::priority_queue<Panel> panels;
  Panel first = evaluate_panel(f, a, b);
  double total = first.value;
  double total_err = first.error;
  panels.push(first);

  auto target = [&] { return std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol); };

  std::size_t subdivisions = 1;
  while (total_err > target() && subdivisions < cfg.max_subdivisions) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at machine resolution
    panels.pop();
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum to remove drift from the incremental updates.
  double sum = 0.0;
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  IntegralResult r;
  r.value = sum;
  r.error_estimate = err;
  r.evaluations = evals;
  r.converged = err <= std::max(cfg.rel_tol * std::abs(sum), cfg.abs_tol);
  return r;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("abs_tol must be >= 0");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
  if (!(decay_scale > 0.0) || !std::isfinite(decay_scale))
    throw std::invalid_argument("decay_scale must be finite and > 0");
}

QuadratureConfig QuadratureConfig::nested() const {
  QuadratureConfig c = *this;
  c.rel_tol = std::max(rel_tol * 0.1, 1e-14);
  return c;
}

double IntegralResult::tolerance(const QuadratureConfig& cfg) const {
  return std::max(cfg.rel_tol * std::abs(value), cfg.abs_tol);
}

EvaluationError::EvaluationError(double abscissa, const std::string& what)
    : std::runtime_error(what), abscissa_(abscissa) {}

IntegralResult integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate_finite requires finite a < b");
  std::size_t evals = 0;
  CheckedIntegrand g(f, evals);
  return adaptive(g, a, b, cfg, evals);
}

IntegralResult integrate_semi_infinite(const Integrand& f, double a,
                                       const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a)) throw std::invalid_argument("lower limit must be finite");
  std::size_t evals = 0;
  const double s = cfg.decay_scale;
  auto mapped = [&](double t) -> double {
    const double one_minus = 1.0 - t;
    const double x = a + t / (s * one_minus);
    const double jac = 1.0 / (s * one_minus * one_minus);
    ++evals;
    const double y = f(x);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "integrand is not finite (" << y << ") at x = " << x;
      throw EvaluationError(x, os.str());
    }
    if (y == 0.0) return 0.0;
    return y * jac;
  };
  return adaptive(mapped, 0.0, 1.0, cfg, evals);
}

IntegralResult integrate_2d_wedge(const Integrand2& f, const QuadratureConfig& cfg) {
  cfg.validate();
  const QuadratureConfig inner_cfg = cfg.nested();
  std::size_t inner_evals = 0;
  bool inner_ok = true;
  double inner_rel_err = 0.0;

  auto outer = [&](double u) -> double {
    auto g = [&](double t) { return f(u, u + t); };
    const IntegralResult in = integrate_semi_infinite(g, 0.0, inner_cfg);
    inner_evals += in.evaluations;
    inner_ok = inner_ok && in.converged;
    if (in.value != 0.0)
      inner_rel_err = std::max(inner_rel_err, in.error_estimate / std::abs(in.value));
    return in.value;
  };

  // Half the budget for the outer rule, the rest absorbs the inner errors.
  QuadratureConfig outer_cfg = cfg;
  outer_cfg.rel_tol = 0.5 * cfg.rel_tol;
  IntegralResult r = integrate_semi_infinite(outer, 0.0, outer_cfg);
  r.evaluations = inner_evals;
  r.error_estimate += inner_rel_err * std::abs(r.value);
  r.converged = r.converged && inner_ok && r.error_estimate <= r.tolerance(cfg);
  return r;
}

}  // namespace casimir::quad
