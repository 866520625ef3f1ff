#include "casimir/ratios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "casimir/energy.hpp"
#include "casimir/exact.hpp"
#include "casimir/pws.hpp"

namespace casimir::ratios {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double static_eps0(const Material& m) { return m.is_perfect_mirror() ? kInf : m.eps_iu(0.0); }

RatioPoint base_point(Curve c, const Material& m, const RatioOptions& opt) {
  if (!(opt.L > 0.0)) throw GeometryError("reference L must be > 0");
  RatioPoint p;
  p.geometry = curve_geometry(c);
  p.eps0 = static_eps0(m);
  p.L = opt.L;
  return p;
}

bool vacuum_like(const RatioPoint& p) { return p.eps0 == 1.0; }

void fill_ratio(RatioPoint& p, const EnergyResult& pws_lr, const EnergyResult& exact) {
  p.pws_value = pws_lr.value;
  p.exact_value = exact.value;
  p.ratio = pws_lr.value / exact.value;
  p.quad_error = exact.quadrature.error_estimate / std::abs(exact.value);
  p.converged = exact.quadrature.converged;
}

RatioPoint planar_ratio(Curve c, const Material& m_in, const geometry::Spec& spec,
                        std::optional<double> e_rel, const RatioOptions& opt) {
  const Material m = m_in.static_limit();
  RatioPoint p = base_point(c, m, opt);
  p.e_rel = e_rel;
  geometry::validate(spec);
  if (vacuum_like(p)) {
    p.ratio = 1.0;
    p.by_continuity = true;
    return p;
  }
  const EnergyResult num = pws::pws_long_range(spec, m, m);
  const EnergyResult den = exact::exact_energy(spec, m, m, opt.quadrature);
  fill_ratio(p, num, den);
  return p;
}

Material eps_material(double eps0, const RatioOptions& opt) {
  if (std::isinf(eps0)) return Material::perfect_mirror(opt.n_v);
  return Material::static_eps(eps0, opt.n_v);
}

}  // namespace

std::string curve_geometry(Curve c) {
  switch (c) {
    case Curve::AtomPlate: return "atom-plate";
    case Curve::AtomSlab: return "atom-slab";
    case Curve::PlatePlate: return "plate-plate";
    case Curve::SlabSlab: return "slab-slab";
    case Curve::Sphere: return "sphere-plate";
  }
  return "unknown";
}

RatioPoint ratio_atom_plate_lr(const Material& m, const RatioOptions& opt) {
  return planar_ratio(Curve::AtomPlate, m, geometry::AtomPlate{opt.L}, std::nullopt, opt);
}

RatioPoint ratio_atom_plate_lr(double eps0, const RatioOptions& opt) {
  return ratio_atom_plate_lr(eps_material(eps0, opt), opt);
}

RatioPoint ratio_atom_slab_lr(const Material& m, double e_rel, const RatioOptions& opt) {
  if (std::isinf(e_rel)) {
    RatioPoint p = ratio_atom_plate_lr(m, opt);
    p.e_rel = e_rel;
    return p;
  }
  return planar_ratio(Curve::AtomSlab, m, geometry::AtomSlab{opt.L, e_rel * opt.L}, e_rel, opt);
}

RatioPoint ratio_atom_slab_lr(double eps0, double e_rel, const RatioOptions& opt) {
  return ratio_atom_slab_lr(eps_material(eps0, opt), e_rel, opt);
}

RatioPoint ratio_plate_plate_lr(const Material& m, const RatioOptions& opt) {
  return planar_ratio(Curve::PlatePlate, m, geometry::PlatePlate{opt.L}, std::nullopt, opt);
}

RatioPoint ratio_plate_plate_lr(double eps0, const RatioOptions& opt) {
  return ratio_plate_plate_lr(eps_material(eps0, opt), opt);
}

RatioPoint ratio_slab_slab_lr(const Material& m, double e_rel, const RatioOptions& opt) {
  if (std::isinf(e_rel)) {
    RatioPoint p = ratio_plate_plate_lr(m, opt);
    p.e_rel = e_rel;
    return p;
  }
  const double e = e_rel * opt.L;
  return planar_ratio(Curve::SlabSlab, m, geometry::SlabSlab{opt.L, e, e}, e_rel, opt);
}

RatioPoint ratio_slab_slab_lr(double eps0, double e_rel, const RatioOptions& opt) {
  return ratio_slab_slab_lr(eps_material(eps0, opt), e_rel, opt);
}

RatioPoint ratio_sphere_pws_limits(const Material& m_in, double l_over_r,
                                   const RatioOptions& opt) {
  if (!(l_over_r > 0.0) || !std::isfinite(l_over_r))
    throw GeometryError("L/R must be finite and > 0");
  const Material m = m_in.static_limit();
  RatioPoint p = base_point(Curve::Sphere, m, opt);
  p.l_over_r = l_over_r;
  const double R = opt.L / l_over_r;
  p.pws_value = pws::pws_long_range(geometry::SpherePlate{opt.L + R, R}, m, m).value;
  std::optional<RatioPoint> anchor;
  if (l_over_r >= kSmallSphereThreshold)
    anchor = ratio_atom_plate_lr(m, opt);
  else if (l_over_r <= kLargeSphereThreshold)
    anchor = ratio_plate_plate_lr(m, opt);
  if (anchor) {
    p.ratio = anchor->ratio;
    p.by_continuity = anchor->by_continuity;
    p.quad_error = anchor->quad_error;
    p.converged = anchor->converged;
  }
  return p;
}

RatioPoint ratio_sphere_pws_limits(double eps0, double l_over_r, const RatioOptions& opt) {
  return ratio_sphere_pws_limits(eps_material(eps0, opt), l_over_r, opt);
}

double small_sphere_perfect_mirror_ratio(double l_over_r) {
  const double L = 1.0;
  const double R = L / l_over_r;
  const Material pm = Material::perfect_mirror();
  const double pws_value = pws::pws_long_range(geometry::SpherePlate{L + R, R}, pm, pm).value;
  const double alpha_e = R * R * R;
  const double alpha_m = -0.5 * R * R * R;
  const double exact_value = -3.0 / (8.0 * pi * std::pow(L, 4)) * (alpha_e - alpha_m);
  return pws_value / exact_value;
}

RatioPoint ratio_point(Curve c, const Material& m, std::optional<double> param,
                       const RatioOptions& opt) {
  auto need = [&]() {
    if (!param) throw std::invalid_argument(curve_geometry(c) + " needs a relative parameter");
    return *param;
  };
  switch (c) {
    case Curve::AtomPlate: return ratio_atom_plate_lr(m, opt);
    case Curve::AtomSlab: return ratio_atom_slab_lr(m, need(), opt);
    case Curve::PlatePlate: return ratio_plate_plate_lr(m, opt);
    case Curve::SlabSlab: return ratio_slab_slab_lr(m, need(), opt);
    case Curve::Sphere: return ratio_sphere_pws_limits(m, need(), opt);
  }
  throw std::invalid_argument("unknown curve");
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log grid needs 0 < lo < hi");
  std::vector<double> xs(n);
  if (n == 0) return xs;
  if (n == 1) {
    xs[0] = lo;
    return xs;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

std::vector<RatioPoint> parallel_map(std::size_t n,
                                     const std::function<RatioPoint(std::size_t)>& fn,
                                     unsigned jobs) {
  std::vector<RatioPoint> out(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Extremum find_extremum(const std::function<double(double)>& curve, double lo, double hi,
                       double rel_tol) {
  if (!(hi > lo)) throw BracketError("bracket needs lo < hi");
  constexpr std::size_t kScan = 32;
  const bool logarithmic = lo > 0.0;
  // Search coordinate: log x on positive brackets.
  auto to_x = [&](double s) { return logarithmic ? std::exp(s) : s; };
  const double s_lo = logarithmic ? std::log(lo) : lo;
  const double s_hi = logarithmic ? std::log(hi) : hi;

  std::vector<double> s(kScan), y(kScan);
  for (std::size_t i = 0; i < kScan; ++i) {
    s[i] = s_lo + (s_hi - s_lo) * static_cast<double>(i) / (kScan - 1);
    y[i] = curve(to_x(s[i]));
  }

  Extremum ext;
  std::size_t best = 0;
  for (std::size_t i = 1; i < kScan; ++i)
    if (y[i] > y[best]) best = i;
  for (std::size_t i = 1; i + 1 < kScan; ++i)
    if (y[i] >= y[i - 1] && y[i] >= y[i + 1]) ext.brackets.emplace_back(to_x(s[i - 1]), to_x(s[i + 1]));
  if (best == 0 || best == kScan - 1)
    throw BracketError("no interior maximum in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");

  constexpr double kInvPhi = 0.6180339887498949;
  double a = s[best - 1];
  double b = s[best + 1];
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = curve(to_x(c));
  double fd = curve(to_x(d));
  auto width = [&]() {
    // Relative abscissa width: in log coordinates this is b - a directly.
    return logarithmic ? b - a : (b - a) / std::max(std::abs(0.5 * (a + b)), 1e-300);
  };
  while (width() > rel_tol && (b - a) > 0.0) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = curve(to_x(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = curve(to_x(d));
    }
    if (!logarithmic && std::abs(0.5 * (a + b)) < 1e-300 && (b - a) < rel_tol) break;
  }
  if (fc > fd) {
    ext.x = to_x(c);
    ext.value = fc;
  } else {
    ext.x = to_x(d);
    ext.value = fd;
  }
  return ext;
}

std::vector<std::pair<double, double>> sign_changes(const std::vector<double>& xs,
                                                    const std::vector<double>& ys, double level) {
  if (xs.size() != ys.size()) throw std::invalid_argument("sign_changes: size mismatch");
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double a = ys[i - 1] - level;
    const double b = ys[i] - level;
    if ((a < 0.0 && b >= 0.0) || (a >= 0.0 && b < 0.0)) out.emplace_back(xs[i - 1], xs[i]);
  }
  return out;
}

}  // namespace casimir::ratios
