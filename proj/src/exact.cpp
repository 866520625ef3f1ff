#include "casimir/exact.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace casimir::exact {

namespace {

using std::numbers::pi;

EnergyResult from_integral(const quad::IntegralResult& q, double prefactor, PerUnit per_unit,
                           Method method) {
  EnergyResult r;
  r.value = prefactor * q.value;
  r.per_unit = per_unit;
  r.method = method;
  r.quadrature = q;
  r.quadrature.value = r.value;
  r.quadrature.error_estimate = std::abs(prefactor) * q.error_estimate;
  return r;
}

void require_length(double v, const char* what) {
  if (!(v > 0.0)) throw GeometryError(std::string(what) + " must be > 0");
}

// e_A = inf selects the bulk coefficient.
double slab_or_bulk(const Material& m, const WaveParams& w, double e_A, Polarization p) {
  return reflection(m, w, e_A, p);
}

}  // namespace

double WaveParams::k() const { return std::sqrt(std::max(0.0, (kappa - u) * (kappa + u))); }

double WaveParams::kappa_m(double eps) const {
  return std::sqrt(kappa * kappa + (eps - 1.0) * u * u);
}

void WaveParams::validate() const {
  if (!(u >= 0.0) || !(kappa >= u))
    throw std::domain_error("wave parameters need 0 <= u <= kappa");
}

double fresnel_bulk(double eps, const WaveParams& w, Polarization p) {
  if (!(eps >= 1.0)) throw std::logic_error("reflection coefficient needs eps >= 1");
  if (std::isinf(eps)) return -1.0;
  const double km = w.kappa_m(eps);
  const double de = eps - 1.0;
  // Numerators written as differences of squares so that eps -> 1 stays exact.
  if (p == Polarization::TE) {
    const double s = w.kappa + km;
    if (s == 0.0) return 0.0;
    return -de * w.u * w.u / (s * s);
  }
  const double s = km + eps * w.kappa;
  if (s == 0.0) return -de / (eps + 1.0);
  return -de * ((eps + 1.0) * w.kappa * w.kappa - w.u * w.u) / (s * s);
}

double slab_reflection_exact(double eps, const WaveParams& w, double e_A, Polarization p) {
  if (!(e_A > 0.0)) throw GeometryError("slab thickness must be > 0");
  if (std::isinf(eps)) return -1.0;
  const double rb = fresnel_bulk(eps, w, p);
  if (std::isinf(e_A)) return rb;
  // -sinh(eta)/sinh(eta+theta) = rb (1 - e^{-2 eta}) / (1 - rb^2 e^{-2 eta})
  const double x = std::exp(-2.0 * e_A * w.kappa_m(eps));
  return rb * -std::expm1(-2.0 * e_A * w.kappa_m(eps)) / (1.0 - rb * rb * x);
}

double slab_reflection_summed(const Material& slab, const WaveParams& w, double e_A,
                              Polarization p) {
  if (!(e_A > 0.0)) throw GeometryError("slab thickness must be > 0");
  if (w.kappa == 0.0) return 0.0;
  const double na = slab.n_v() * slab.alpha_iu(w.u).value;
  const double fill = std::isinf(e_A) ? 1.0 : -std::expm1(-2.0 * w.kappa * e_A);
  const double kk = w.kappa * w.kappa;
  // TM carries u^2 (1 + 2k^2/u^2) = u^2 + 2k^2, finite as u -> 0.
  const double weight = p == Polarization::TE ? w.u * w.u : w.u * w.u + 2.0 * (kk - w.u * w.u);
  return -pi * na * weight * fill / kk;
}

double reflection(const Material& m, const WaveParams& w, double e_A, Polarization p) {
  if (m.is_perfect_mirror()) return -1.0;
  return slab_reflection_exact(m.eps_iu(w.u), w, e_A, p);
}

double thin_slab_first_order(ThinSlabSource source, const Material& slab, const WaveParams& w,
                             double e_A, Polarization p) {
  const double u2 = w.u * w.u;
  const double k2 = std::max(0.0, w.kappa * w.kappa - u2);
  if (source == ThinSlabSource::Summed) {
    const double na = slab.n_v() * slab.alpha_iu(w.u).value;
    const double weight = p == Polarization::TE ? u2 : u2 + 2.0 * k2;
    return -2.0 * pi * na * e_A * weight / w.kappa;
  }
  const double eps = slab.eps_iu(w.u);
  const double weight = p == Polarization::TE ? u2 : u2 + (eps + 1.0) / eps * k2;
  return -e_A * (eps - 1.0) * weight / (2.0 * w.kappa);
}

EnergyResult exact_atom_slab(const Material& atom_b, const Material& slab, double L, double e_A,
                             const QuadratureConfig& cfg) {
  require_length(L, "L");
  require_length(e_A, "e_A");
  auto integrand = [&](double u, double kappa) {
    const double decay = std::exp(-2.0 * kappa * L);
    if (decay == 0.0) return 0.0;
    const double a = atom_b.alpha_iu(u).value;
    if (a == 0.0) return 0.0;
    const WaveParams w{u, kappa};
    const double rte = slab_or_bulk(slab, w, e_A, Polarization::TE);
    const double rtm = slab_or_bulk(slab, w, e_A, Polarization::TM);
    return a * decay * (u * u * rte + (2.0 * kappa * kappa - u * u) * rtm);
  };
  const auto q = quad::integrate_2d_wedge(integrand, cfg.with_decay_scale(2.0 * L));
  return from_integral(q, 1.0 / (2.0 * pi), PerUnit::Total, Method::Exact);
}

EnergyResult exact_atom_plate(const Material& atom_b, const Material& plate, double L,
                              const QuadratureConfig& cfg) {
  return exact_atom_slab(atom_b, plate, L, std::numeric_limits<double>::infinity(), cfg);
}

EnergyResult exact_slab_slab(const Material& slab_a, const Material& slab_b, double L, double e_A,
                             double e_B, const QuadratureConfig& cfg) {
  require_length(L, "L");
  require_length(e_A, "e_A");
  require_length(e_B, "e_B");
  auto integrand = [&](double u, double kappa) {
    const double decay = std::exp(-2.0 * kappa * L);
    if (decay == 0.0) return 0.0;
    const WaveParams w{u, kappa};
    double sum = 0.0;
    for (Polarization p : {Polarization::TE, Polarization::TM}) {
      const double rr = slab_or_bulk(slab_a, w, e_A, p) * slab_or_bulk(slab_b, w, e_B, p);
      sum += std::log1p(-rr * decay);
    }
    return kappa * sum;
  };
  const auto q = quad::integrate_2d_wedge(integrand, cfg.with_decay_scale(2.0 * L));
  return from_integral(q, 1.0 / (4.0 * pi * pi), PerUnit::PerArea, Method::Exact);
}

EnergyResult exact_slab_slab(const Material& slabs, double L, double e_A, double e_B,
                             const QuadratureConfig& cfg) {
  return exact_slab_slab(slabs, slabs, L, e_A, e_B, cfg);
}

EnergyResult exact_plate_plate(const Material& plate_a, const Material& plate_b, double L,
                               const QuadratureConfig& cfg) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return exact_slab_slab(plate_a, plate_b, L, inf, inf, cfg);
}

EnergyResult exact_plate_plate(const Material& plates, double L, const QuadratureConfig& cfg) {
  return exact_plate_plate(plates, plates, L, cfg);
}

EnergyResult exact_plate_plate_single_roundtrip(const Material& plates, double L,
                                                const QuadratureConfig& cfg) {
  require_length(L, "L");
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto integrand = [&](double u, double kappa) {
    const double decay = std::exp(-2.0 * kappa * L);
    if (decay == 0.0) return 0.0;
    const WaveParams w{u, kappa};
    double sum = 0.0;
    for (Polarization p : {Polarization::TE, Polarization::TM}) {
      const double r = slab_or_bulk(plates, w, inf, p);
      sum -= r * r * decay;
    }
    return kappa * sum;
  };
  const auto q = quad::integrate_2d_wedge(integrand, cfg.with_decay_scale(2.0 * L));
  return from_integral(q, 1.0 / (4.0 * pi * pi), PerUnit::PerArea, Method::Exact);
}

EnergyResult pws_via_reflection(const Material& slab_a, const Material& atom_b, double L,
                                double e_A, const QuadratureConfig& cfg) {
  require_length(L, "L");
  require_length(e_A, "e_A");
  auto integrand = [&](double u, double kappa) {
    const double decay = std::exp(-2.0 * kappa * L);
    if (decay == 0.0) return 0.0;
    const double a = atom_b.alpha_iu(u).value;
    if (a == 0.0) return 0.0;
    const WaveParams w{u, kappa};
    const double rte = slab_reflection_summed(slab_a, w, e_A, Polarization::TE);
    const double rtm = slab_reflection_summed(slab_a, w, e_A, Polarization::TM);
    return a * decay * (u * u * rte + (2.0 * kappa * kappa - u * u) * rtm);
  };
  const auto q = quad::integrate_2d_wedge(integrand, cfg.with_decay_scale(2.0 * L));
  return from_integral(q, 1.0 / (2.0 * pi), PerUnit::Total, Method::PwsClosedForm);
}

EnergyResult exact_energy(const geometry::Spec& spec, const Material& body_a,
                          const Material& body_b, const QuadratureConfig& cfg) {
  using namespace geometry;
  validate(spec);
  return std::visit(
      [&](const auto& g) -> EnergyResult {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, AtomSlab>)
          return exact_atom_slab(body_b, body_a, g.L, g.e_A, cfg);
        else if constexpr (std::is_same_v<T, AtomPlate>)
          return exact_atom_plate(body_b, body_a, g.L, cfg);
        else if constexpr (std::is_same_v<T, SlabSlab>)
          return exact_slab_slab(body_a, body_b, g.L, g.e_A, g.e_B, cfg);
        else if constexpr (std::is_same_v<T, PlatePlate>)
          return exact_plate_plate(body_a, body_b, g.L, cfg);
        else
          throw GeometryError(std::string("no exact energy for geometry ") +
                              std::string(name(spec)));
      },
      spec);
}

}  // namespace casimir::exact
