#pragma once

// Scattering-theory energies for planar bodies: reflection coefficients on the
// imaginary frequency axis, the atom-plate Casimir-Polder integral and the
// Lifshitz plate-plate energy.
//
// Sign convention for reflection coefficients: r_TE = (kappa - kappa_m) /
// (kappa + kappa_m) and r_TM = (kappa_m - eps kappa) / (eps kappa + kappa_m),
// both in [-1, 0] for eps >= 1. A perfect mirror has r_TE = r_TM = -1. With
// this convention the atom-plate integral is negative (attractive) as written.

#include "casimir/energy.hpp"
#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::exact {

using quad::QuadratureConfig;

enum class Polarization { TE, TM };

// Imaginary frequency u and vacuum longitudinal wavevector kappa >= u.
struct WaveParams {
  double u;
  double kappa;

  // Transverse wavevector modulus sqrt(kappa^2 - u^2).
  double k() const;
  // sqrt(eps u^2 + k^2).
  double kappa_m(double eps) const;
  // Throws std::domain_error unless 0 <= u <= kappa.
  void validate() const;
};

double fresnel_bulk(double eps, const WaveParams& w, Polarization p);

// Slab of thickness e_A from the vacuum/matter/vacuum transfer matrix:
// r = -sinh(eta) / sinh(eta + theta), eta = e_A kappa_m, r_bulk = -e^{-theta}.
double slab_reflection_exact(double eps, const WaveParams& w, double e_A, Polarization p);

// Slab coefficient obtained by adding the reflection matrices of its atoms.
double slab_reflection_summed(const Material& slab, const WaveParams& w, double e_A,
                              Polarization p);

// Reflection coefficient of a material: infinite thickness for e_A = inf.
double reflection(const Material& m, const WaveParams& w, double e_A, Polarization p);

enum class ThinSlabSource { Summed, Exact };

// Coefficients to first order in e_A.
//   summed: r_TE = -2 pi n_v e_A a u^2 / kappa,   r_TM = r_TE (1 + 2 k^2 / u^2)
//   exact:  r_TE = -e_A (eps - 1) u^2 / (2 kappa),
//           r_TM = -(1 + (eps + 1) k^2 / (eps u^2)) e_A (eps - 1) u^2 / (2 kappa)
double thin_slab_first_order(ThinSlabSource source, const Material& slab, const WaveParams& w,
                             double e_A, Polarization p);

// Atom B at distance L from a plate (or slab of thickness e_A):
// (1/2pi) int du u^2 a_B int_u^inf dkappa e^{-2 kappa L} [r_TE + (2 kappa^2/u^2 - 1) r_TM].
EnergyResult exact_atom_plate(const Material& atom_b, const Material& plate, double L,
                              const QuadratureConfig& cfg = {});
EnergyResult exact_atom_slab(const Material& atom_b, const Material& slab, double L, double e_A,
                             const QuadratureConfig& cfg = {});

// Lifshitz energy per unit area:
// (1/4pi^2) int du int_u^inf dkappa kappa sum_p ln(1 - r_A^p r_B^p e^{-2 kappa L}).
EnergyResult exact_plate_plate(const Material& plate_a, const Material& plate_b, double L,
                               const QuadratureConfig& cfg = {});
EnergyResult exact_plate_plate(const Material& plates, double L, const QuadratureConfig& cfg = {});
EnergyResult exact_slab_slab(const Material& slab_a, const Material& slab_b, double L, double e_A,
                             double e_B, const QuadratureConfig& cfg = {});
EnergyResult exact_slab_slab(const Material& slabs, double L, double e_A, double e_B,
                             const QuadratureConfig& cfg = {});

// Lifshitz integral with ln(1 - x) replaced by -x: one round trip only.
EnergyResult exact_plate_plate_single_roundtrip(const Material& plates, double L,
                                                const QuadratureConfig& cfg = {});

// First-order scattering energy of atom B and a slab whose reflection is the
// sum of its atoms' reflections. Reproduces pws::pws_atom_slab.
EnergyResult pws_via_reflection(const Material& slab_a, const Material& atom_b, double L,
                                double e_A, const QuadratureConfig& cfg = {});

// Dispatch for the planar geometries; throws GeometryError for spheres and
// atom-atom, which have no exact counterpart here.
EnergyResult exact_energy(const geometry::Spec& spec, const Material& body_a,
                          const Material& body_b, const QuadratureConfig& cfg = {});

}  // namespace casimir::exact
