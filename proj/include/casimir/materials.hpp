#pragma once

// Dielectric response on the imaginary frequency axis omega = i c u, in reduced
// units hbar = c = 1. Polarizabilities are the reduced volumes
// alpha / (4 pi eps0); number densities are per unit volume.

#include <stdexcept>
#include <string>
#include <variant>

namespace casimir {

// alpha / (4 pi eps0), a volume.
struct ReducedPolarizability {
  double value = 0.0;
};

namespace material {

struct Static {
  double eps0;
};
// eps(iu) = 1 + (eps0 - 1) / (1 + (u/u_res)^2)
struct LorentzEps {
  double eps0;
  double u_res;
};
struct StaticAlpha {
  double a0;
};
// a(iu) = a0 / (1 + (u/u_res)^2)
struct LorentzAlpha {
  double a0;
  double u_res;
};
// eps -> infinity: r_TE = r_TM = -1 at every frequency and thickness.
struct PerfectMirror {};

using Model = std::variant<Static, LorentzEps, StaticAlpha, LorentzAlpha, PerfectMirror>;

}  // namespace material

// Clausius-Mossotti: (eps - 1) / (eps + 2) = (4 pi / 3) n_v a.
ReducedPolarizability alpha_from_eps_cm(double eps, double n_v);
double eps_from_alpha_cm(ReducedPolarizability a, double n_v);
// Dilute truncation 1 + 4 pi n_v a, which drops local-field corrections.
double eps_dilute_first_order(ReducedPolarizability a, double n_v);

class Material {
 public:
  explicit Material(material::Model model, double n_v = 1.0);

  static Material static_eps(double eps0, double n_v = 1.0) {
    return Material(material::Static{eps0}, n_v);
  }
  static Material static_alpha(double a0, double n_v = 1.0) {
    return Material(material::StaticAlpha{a0}, n_v);
  }
  static Material perfect_mirror(double n_v = 1.0) {
    return Material(material::PerfectMirror{}, n_v);
  }

  const material::Model& model() const { return model_; }
  double n_v() const { return n_v_; }

  // Permittivity at imaginary frequency u. Polarizability models convert
  // through Clausius-Mossotti; the perfect mirror returns +infinity.
  double eps_iu(double u) const;
  // Reduced polarizability of one constituent at imaginary frequency u.
  ReducedPolarizability alpha_iu(double u) const;

  bool is_static() const;
  // Same material with the dispersion removed: the u = 0 response at all u.
  Material static_limit() const;
  bool is_perfect_mirror() const;

  std::string describe() const;

 private:
  material::Model model_;
  double n_v_;
};

// Thrown by eps_from_alpha_cm when (4 pi / 3) n_v a >= 1.
class PolarizationCatastrophe : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace casimir
