#include "casimir/pws.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "casimir/specfun.hpp"

namespace casimir::pws {

namespace {

using quad::IntegralResult;
using specfun::PrimitiveKind;
using std::numbers::pi;

constexpr double kSeriesRadiusRatio = 0.1;
constexpr double kSeriesMaxDelta = 1.0;

double alpha_product(const Material& a, const Material& b, double u) {
  return a.alpha_iu(u).value * b.alpha_iu(u).value;
}

EnergyResult make_result(const IntegralResult& q, double prefactor, PerUnit per_unit,
                         Method method = Method::PwsClosedForm) {
  EnergyResult r;
  r.value = prefactor * q.value;
  r.per_unit = per_unit;
  r.method = method;
  r.quadrature = q;
  r.quadrature.value = r.value;
  r.quadrature.error_estimate = std::abs(prefactor) * q.error_estimate;
  return r;
}

EnergyResult closed_value(double value, PerUnit per_unit, Method method) {
  EnergyResult r;
  r.value = value;
  r.per_unit = per_unit;
  r.method = method;
  r.quadrature.value = value;
  return r;
}

// u^3 f(2uX), finite at u = 0.
double f_term(double u, double X) {
  const double s = 2.0 * X;
  return specfun::primitive_scaled(PrimitiveKind::F, s * u) / (s * s * s);
}

// u^2 g(2uX).
double g_term(double u, double X) {
  const double s = 2.0 * X;
  return specfun::primitive_scaled(PrimitiveKind::G, s * u) / (s * s);
}

// d^{(k)}(y) = e^{-y} L_k(y) with L_{k+1} = L_k' - L_k and
// L_0 = -(y^-1 + 4 y^-2 + 20 y^-3 + 48 y^-4 + 48 y^-5). Entry [k][j] is the
// coefficient of y^{-(j+1)}. All coefficients of one L_k share a sign.
constexpr int kMaxDerivative = 40;

const std::vector<std::vector<double>>& d_derivative_table() {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t;
    t.push_back({-1.0, -4.0, -20.0, -48.0, -48.0});
    for (int k = 1; k <= kMaxDerivative; ++k) {
      const auto& prev = t.back();
      std::vector<double> next(prev.size() + 1, 0.0);
      for (std::size_t j = 0; j < prev.size(); ++j) {
        next[j + 1] -= static_cast<double>(j + 1) * prev[j];
        next[j] -= prev[j];
      }
      t.push_back(std::move(next));
    }
    return t;
  }();
  return table;
}

// y^{5+k} d^{(k)}(y), finite at y = 0.
double d_derivative_scaled(int k, double y) {
  const auto& c = d_derivative_table()[static_cast<std::size_t>(k)];
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) s = s * y + c[j];
  return std::exp(-y) * s;
}

// Cross-section sum of a sphere of radius R at center distance X:
//   S = 2uR [h(2u(X+R)) + h(2u(X-R))] - i(2u(X+R)) + i(2u(X-R)).
// For a small sphere the two halves cancel to O((R/X)^3), so S is taken from
// its Taylor series in delta = 2uR:
//   S = 2 sum_{m even} h^{(m)}(y) delta^{m+1} m / (m+1)!,  y = 2uX,
// with h'' = f and h^{(4+k)} = d^{(k)}.
double sphere_term_series(double u, double X, double R) {
  const double y = 2.0 * u * X;
  const double r = R / X;
  double sum = r * r * r * specfun::primitive_scaled(PrimitiveKind::F, y) / 3.0;
  double r_pow = r * r * r * r * r;
  double fact = 120.0;  // (5+k)!
  for (int k = 0; k <= kMaxDerivative; k += 2) {
    const double term = r_pow * d_derivative_scaled(k, y) * (4.0 + k) / fact;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    r_pow *= r * r;
    fact *= (6.0 + k) * (7.0 + k);
  }
  return 2.0 * sum;
}

double sphere_term(double u, double X, double R) {
  if (R <= kSeriesRadiusRatio * X && 2.0 * u * R <= kSeriesMaxDelta)
    return sphere_term_series(u, X, R);
  const double far = X + R;
  const double near = X - R;
  const double h_part = R / far * specfun::primitive_scaled(PrimitiveKind::H, 2.0 * u * far) +
                        R / near * specfun::primitive_scaled(PrimitiveKind::H, 2.0 * u * near);
  const double i_part = specfun::primitive(PrimitiveKind::I, 2.0 * u * near) -
                        specfun::primitive(PrimitiveKind::I, 2.0 * u * far);
  return h_part + i_part;
}

double static_alpha_product(const Material& a, const Material& b) {
  return alpha_product(a, b, 0.0);
}

// Long-range sphere-plate energy per (n_a n_b a_a a_b).
double sphere_plate_lr_shape(double center, double R) {
  const double d = center * center - R * R;
  return -(23.0 / 30.0) * pi * R * R * R / (d * d);
}

}  // namespace

double atom_slab_thickness_factor(double e_rel) {
  if (std::isinf(e_rel)) return 1.0;
  return 1.0 - std::pow(1.0 + e_rel, -4.0);
}

double slab_slab_thickness_factor(double e_a_rel, double e_b_rel) {
  auto inv3 = [](double x) { return std::isinf(x) ? 0.0 : std::pow(x, -3.0); };
  return 1.0 - inv3(1.0 + e_a_rel) - inv3(1.0 + e_b_rel) + inv3(1.0 + e_a_rel + e_b_rel);
}

EnergyResult vdw_atom_atom(const Material& atom_a, const Material& atom_b, double d,
                           const QuadratureConfig& cfg) {
  geometry::validate(geometry::AtomAtom{d});
  const double d2 = d * d;
  const double d3 = d2 * d;
  const double d4 = d2 * d2;
  auto integrand = [&](double u) {
    const double aa = alpha_product(atom_a, atom_b, u);
    if (aa == 0.0) return 0.0;
    const double poly = 3.0 / d4 + u * (6.0 / d3 + u * (5.0 / d2 + u * (2.0 / d + u)));
    return aa * std::exp(-2.0 * u * d) * poly;
  };
  const auto q = quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * d));
  return make_result(q, -1.0 / (pi * d2), PerUnit::Total);
}

EnergyResult pws_atom_slab(const Material& body_a, const Material& atom_b, double L, double e_A,
                           const QuadratureConfig& cfg) {
  geometry::validate(geometry::AtomSlab{L, e_A});
  auto integrand = [&](double u) {
    const double aa = alpha_product(body_a, atom_b, u);
    if (aa == 0.0) return 0.0;
    return aa * (f_term(u, L) - f_term(u, L + e_A));
  };
  const auto q = quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * L));
  return make_result(q, body_a.n_v(), PerUnit::Total);
}

EnergyResult pws_atom_plate(const Material& body_a, const Material& atom_b, double L,
                            const QuadratureConfig& cfg) {
  geometry::validate(geometry::AtomPlate{L});
  auto integrand = [&](double u) {
    const double aa = alpha_product(body_a, atom_b, u);
    if (aa == 0.0) return 0.0;
    return aa * f_term(u, L);
  };
  const auto q = quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * L));
  return make_result(q, body_a.n_v(), PerUnit::Total);
}

EnergyResult pws_slab_slab(const Material& body_a, const Material& body_b, double L, double e_A,
                           double e_B, const QuadratureConfig& cfg) {
  geometry::validate(geometry::SlabSlab{L, e_A, e_B});
  auto integrand = [&](double u) {
    const double aa = alpha_product(body_a, body_b, u);
    if (aa == 0.0) return 0.0;
    return aa * (g_term(u, L) + g_term(u, L + e_A + e_B) - g_term(u, L + e_A) -
                 g_term(u, L + e_B));
  };
  const auto q = quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * L));
  return make_result(q, -0.5 * body_a.n_v() * body_b.n_v(), PerUnit::PerArea);
}

EnergyResult pws_plate_plate(const Material& body_a, const Material& body_b, double L,
                             const QuadratureConfig& cfg) {
  geometry::validate(geometry::PlatePlate{L});
  auto integrand = [&](double u) {
    const double aa = alpha_product(body_a, body_b, u);
    if (aa == 0.0) return 0.0;
    return aa * g_term(u, L);
  };
  const auto q = quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * L));
  return make_result(q, -0.5 * body_a.n_v() * body_b.n_v(), PerUnit::PerArea);
}

EnergyResult pws_sphere_slab(const Material& body_a, const Material& sphere_b, double center,
                             double R, double e_A, const QuadratureConfig& cfg) {
  geometry::validate(geometry::SphereSlab{center, R, e_A});
  auto integrand = [&](double u) {
    const double aa = alpha_product(body_a, sphere_b, u);
    if (aa == 0.0) return 0.0;
    return aa * (sphere_term(u, center, R) - sphere_term(u, center + e_A, R));
  };
  const auto q =
      quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * (center - R)));
  return make_result(q, 0.25 * pi * body_a.n_v() * sphere_b.n_v(), PerUnit::Total);
}

EnergyResult pws_sphere_plate(const Material& body_a, const Material& sphere_b, double center,
                              double R, const QuadratureConfig& cfg) {
  geometry::validate(geometry::SpherePlate{center, R});
  auto integrand = [&](double u) {
    const double aa = alpha_product(body_a, sphere_b, u);
    if (aa == 0.0) return 0.0;
    return aa * sphere_term(u, center, R);
  };
  const auto q =
      quad::integrate_semi_infinite(integrand, 0.0, cfg.with_decay_scale(2.0 * (center - R)));
  return make_result(q, 0.25 * pi * body_a.n_v() * sphere_b.n_v(), PerUnit::Total);
}

EnergyResult pws_closed_form(const geometry::Spec& spec, const Material& body_a,
                             const Material& body_b, const QuadratureConfig& cfg) {
  using namespace geometry;
  return std::visit(
      [&](const auto& g) -> EnergyResult {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, AtomAtom>) return vdw_atom_atom(body_a, body_b, g.d, cfg);
        if constexpr (std::is_same_v<T, AtomSlab>)
          return pws_atom_slab(body_a, body_b, g.L, g.e_A, cfg);
        if constexpr (std::is_same_v<T, AtomPlate>) return pws_atom_plate(body_a, body_b, g.L, cfg);
        if constexpr (std::is_same_v<T, SlabSlab>)
          return pws_slab_slab(body_a, body_b, g.L, g.e_A, g.e_B, cfg);
        if constexpr (std::is_same_v<T, PlatePlate>)
          return pws_plate_plate(body_a, body_b, g.L, cfg);
        if constexpr (std::is_same_v<T, SphereSlab>)
          return pws_sphere_slab(body_a, body_b, g.center, g.R, g.e_A, cfg);
        if constexpr (std::is_same_v<T, SpherePlate>)
          return pws_sphere_plate(body_a, body_b, g.center, g.R, cfg);
      },
      spec);
}

EnergyResult pws_long_range(const geometry::Spec& spec, const Material& body_a,
                            const Material& body_b) {
  using namespace geometry;
  validate(spec);
  const double aa = static_alpha_product(body_a, body_b);
  const double na = body_a.n_v();
  const double nb = body_b.n_v();
  return std::visit(
      [&](const auto& g) -> EnergyResult {
        using T = std::decay_t<decltype(g)>;
        const Method m = Method::PwsLongRange;
        if constexpr (std::is_same_v<T, AtomAtom>)
          return closed_value(-23.0 * aa / (4.0 * pi * std::pow(g.d, 7)), PerUnit::Total, m);
        if constexpr (std::is_same_v<T, AtomPlate>)
          return closed_value(-(23.0 / 40.0) * na * aa / std::pow(g.L, 4), PerUnit::Total, m);
        if constexpr (std::is_same_v<T, AtomSlab>)
          return closed_value(-(23.0 / 40.0) * na * aa / std::pow(g.L, 4) *
                                  atom_slab_thickness_factor(g.e_A / g.L),
                              PerUnit::Total, m);
        if constexpr (std::is_same_v<T, PlatePlate>)
          return closed_value(-(23.0 / 120.0) * na * nb * aa / std::pow(g.L, 3), PerUnit::PerArea,
                              m);
        if constexpr (std::is_same_v<T, SlabSlab>)
          return closed_value(-(23.0 / 120.0) * na * nb * aa / std::pow(g.L, 3) *
                                  slab_slab_thickness_factor(g.e_A / g.L, g.e_B / g.L),
                              PerUnit::PerArea, m);
        if constexpr (std::is_same_v<T, SpherePlate>)
          return closed_value(na * nb * aa * sphere_plate_lr_shape(g.center, g.R), PerUnit::Total,
                              m);
        if constexpr (std::is_same_v<T, SphereSlab>)
          return closed_value(na * nb * aa *
                                  (sphere_plate_lr_shape(g.center, g.R) -
                                   sphere_plate_lr_shape(g.center + g.e_A, g.R)),
                              PerUnit::Total, m);
      },
      spec);
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

// Accumulates convergence and evaluation counts across nested integrals.
struct OracleState {
  bool converged = true;
  std::size_t evaluations = 0;

  double take(const IntegralResult& r) {
    converged = converged && r.converged;
    evaluations += r.evaluations;
    return r.value;
  }
};

// Energy of atom B at height z above a slab occupying [z, z + thickness)
// (thickness may be infinite): 2 pi n_A int dz' int_z'^inf dd d U_aa(d).
double oracle_atom_slab(const Material& body_a, const Material& atom_b, double z,
                        double thickness, const QuadratureConfig& cfg, OracleState& st) {
  const QuadratureConfig c1 = cfg.nested();
  const QuadratureConfig c2 = c1.nested();
  auto layer = [&](double zp) {
    // int_0^inf dr r U(sqrt(zp^2 + r^2)) = int_zp^inf dd d U(d)
    auto radial = [&](double dd) { return dd * st.take(vdw_atom_atom(body_a, atom_b, dd, c2).quadrature); };
    return st.take(quad::integrate_semi_infinite(radial, zp, c1.with_decay_scale(1.0 / zp)));
  };
  IntegralResult r = std::isinf(thickness)
                         ? quad::integrate_semi_infinite(layer, z, cfg.with_decay_scale(1.0 / z))
                         : quad::integrate_finite(layer, z, z + thickness, cfg);
  return 2.0 * pi * body_a.n_v() * st.take(r);
}

EnergyResult oracle_result(double value, PerUnit per_unit, const OracleState& st) {
  EnergyResult r;
  r.value = value;
  r.per_unit = per_unit;
  r.method = Method::PwsOracle;
  r.quadrature.value = value;
  r.quadrature.converged = st.converged;
  r.quadrature.evaluations = st.evaluations;
  return r;
}

}  // namespace

EnergyResult oracle_pws(const geometry::Spec& spec, const Material& body_a,
                        const Material& body_b, const QuadratureConfig& cfg) {
  using namespace geometry;
  validate(spec);
  constexpr double inf = std::numeric_limits<double>::infinity();
  OracleState st;

  // Per-area energy of body B's slab [L, L + e_B) above body A's slab.
  auto two_slabs = [&](double L, double e_A, double e_B) {
    const QuadratureConfig inner = cfg.nested();
    auto layer = [&](double z) { return oracle_atom_slab(body_a, body_b, z, e_A, inner, st); };
    const IntegralResult r = std::isinf(e_B)
                                 ? quad::integrate_semi_infinite(layer, L, cfg.with_decay_scale(1.0 / L))
                                 : quad::integrate_finite(layer, L, L + e_B, cfg);
    return body_b.n_v() * st.take(r);
  };

  // Sphere summed over cross-sections at heights center + r, r in [-R, R].
  auto sphere = [&](double center, double R, double e_A) {
    const QuadratureConfig inner = cfg.nested();
    auto slice = [&](double r) {
      return pi * (R * R - r * r) * oracle_atom_slab(body_a, body_b, center + r, e_A, inner, st);
    };
    return body_b.n_v() * st.take(quad::integrate_finite(slice, -R, R, cfg));
  };

  return std::visit(
      [&](const auto& g) -> EnergyResult {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, AtomAtom>) {
          EnergyResult r = vdw_atom_atom(body_a, body_b, g.d, cfg);
          r.method = Method::PwsOracle;
          return r;
        }
        if constexpr (std::is_same_v<T, AtomSlab>)
          return oracle_result(oracle_atom_slab(body_a, body_b, g.L, g.e_A, cfg, st),
                               PerUnit::Total, st);
        if constexpr (std::is_same_v<T, AtomPlate>)
          return oracle_result(oracle_atom_slab(body_a, body_b, g.L, inf, cfg, st),
                               PerUnit::Total, st);
        if constexpr (std::is_same_v<T, SlabSlab>)
          return oracle_result(two_slabs(g.L, g.e_A, g.e_B), PerUnit::PerArea, st);
        if constexpr (std::is_same_v<T, PlatePlate>)
          return oracle_result(two_slabs(g.L, inf, inf), PerUnit::PerArea, st);
        if constexpr (std::is_same_v<T, SphereSlab>)
          return oracle_result(sphere(g.center, g.R, g.e_A), PerUnit::Total, st);
        if constexpr (std::is_same_v<T, SpherePlate>)
          return oracle_result(sphere(g.center, g.R, inf), PerUnit::Total, st);
      },
      spec);
}

}  // namespace casimir::pws
