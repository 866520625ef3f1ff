#pragma once

// PWS / exact energy ratios in the long-range (static response) limit.
// Static models make both energies pure power laws in L, so each ratio is a
// function of eps(0) and of thicknesses relative to L only.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::ratios {

using quad::QuadratureConfig;

enum class Curve { AtomPlate, AtomSlab, PlatePlate, SlabSlab, Sphere };

// Geometry token used in reports ("atom-plate", ...).
std::string curve_geometry(Curve c);

struct RatioPoint {
  std::string geometry;
  double eps0 = 1.0;  // +inf for a perfect mirror
  std::optional<double> e_rel;
  std::optional<double> l_over_r;
  std::optional<double> ratio;  // empty when no exact counterpart exists
  double L = 1.0;
  double pws_value = 0.0;
  std::optional<double> exact_value;
  bool by_continuity = false;  // eps0 == 1: ratio set to 1 without evaluation
  double quad_error = 0.0;     // relative error estimate of the ratio
  bool converged = true;
};

struct RatioOptions {
  double L = 1.0;
  double n_v = 1.0;
  QuadratureConfig quadrature{};
};

// The material is reduced to its static limit; the atom (or the second body)
// is made of the same material, with a from Clausius-Mossotti.
RatioPoint ratio_atom_plate_lr(const Material& m, const RatioOptions& opt = {});
RatioPoint ratio_atom_plate_lr(double eps0, const RatioOptions& opt = {});
RatioPoint ratio_atom_slab_lr(const Material& m, double e_rel, const RatioOptions& opt = {});
RatioPoint ratio_atom_slab_lr(double eps0, double e_rel, const RatioOptions& opt = {});
RatioPoint ratio_plate_plate_lr(const Material& m, const RatioOptions& opt = {});
RatioPoint ratio_plate_plate_lr(double eps0, const RatioOptions& opt = {});
// Equal thicknesses e_A = e_B = e_rel L.
RatioPoint ratio_slab_slab_lr(const Material& m, double e_rel, const RatioOptions& opt = {});
RatioPoint ratio_slab_slab_lr(double eps0, double e_rel, const RatioOptions& opt = {});

// Sphere of radius R = L / l_over_r above a plate. Only the PWS energy is
// computed here; the ratio is taken from the atom-plate curve for
// l_over_r >= 1e3, from the plate-plate curve for l_over_r <= 1e-2, and left
// empty in between.
RatioPoint ratio_sphere_pws_limits(const Material& m, double l_over_r,
                                   const RatioOptions& opt = {});
RatioPoint ratio_sphere_pws_limits(double eps0, double l_over_r, const RatioOptions& opt = {});
inline constexpr double kSmallSphereThreshold = 1e3;
inline constexpr double kLargeSphereThreshold = 1e-2;

// Long-range PWS sphere-plate energy of a small perfect-mirror sphere divided
// by the exact dipole result -(3 / 8 pi L^4)(alpha_E - alpha_M) with
// alpha_E = R^3 and alpha_M = -R^3 / 2. Evaluated at the given L/R.
double small_sphere_perfect_mirror_ratio(double l_over_r = 1e8);

// Dispatch by curve; e_rel is ignored for bulk curves and read as l_over_r for
// the sphere.
RatioPoint ratio_point(Curve c, const Material& m, std::optional<double> param,
                       const RatioOptions& opt = {});

// Log-spaced grid of n points on [lo, hi]; lo > 0.
std::vector<double> log_grid(double lo, double hi, std::size_t n);
inline constexpr double kDefaultEpsLo = 1.001;
inline constexpr double kDefaultEpsHi = 1e6;
inline constexpr std::size_t kDefaultEpsPoints = 200;

// Evaluates fn(i) for i in [0, n) on up to `jobs` threads; results are kept in
// index order. The first exception thrown by any job is rethrown.
std::vector<RatioPoint> parallel_map(std::size_t n, const std::function<RatioPoint(std::size_t)>& fn,
                                     unsigned jobs);

struct Extremum {
  double x = 0.0;
  double value = 0.0;
  // Every bracket [lo, hi] around a local maximum found by the coarse scan.
  std::vector<std::pair<double, double>> brackets;
};

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum of curve on [lo, hi]: a 32-point scan (log-spaced when lo > 0,
// linear otherwise) followed by golden-section search to relative abscissa
// tolerance rel_tol inside the best bracket. Throws BracketError when the scan
// maximum sits at an endpoint.
Extremum find_extremum(const std::function<double(double)>& curve, double lo, double hi,
                       double rel_tol = 1e-4);

// Abscissae where curve(x) - level changes sign between consecutive grid points.
std::vector<std::pair<double, double>> sign_changes(const std::vector<double>& xs,
                                                    const std::vector<double>& ys, double level);

}  // namespace casimir::ratios
