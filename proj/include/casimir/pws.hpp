#pragma once

// Pairwise summation (PWS) of the retarded atom-atom dispersion energy over
// the volume of slabs, plates and spheres.
//
// Material roles: `body_a` is the slab or plate (its n_v enters every
// formula), `body_b` is the isolated atom, the second slab or the sphere.
// In the two-body formulas both densities enter.

#include "casimir/energy.hpp"
#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::pws {

using quad::QuadratureConfig;

// Retarded van der Waals energy between two atoms at distance d.
EnergyResult vdw_atom_atom(const Material& atom_a, const Material& atom_b, double d,
                           const QuadratureConfig& cfg = {});

EnergyResult pws_atom_slab(const Material& body_a, const Material& atom_b, double L,
                           double e_A, const QuadratureConfig& cfg = {});
EnergyResult pws_atom_plate(const Material& body_a, const Material& atom_b, double L,
                            const QuadratureConfig& cfg = {});

// Per unit area.
EnergyResult pws_slab_slab(const Material& body_a, const Material& body_b, double L,
                           double e_A, double e_B, const QuadratureConfig& cfg = {});
EnergyResult pws_plate_plate(const Material& body_a, const Material& body_b, double L,
                             const QuadratureConfig& cfg = {});

// `center` is the sphere-center to slab distance; requires center > R.
EnergyResult pws_sphere_slab(const Material& body_a, const Material& sphere_b, double center,
                             double R, double e_A, const QuadratureConfig& cfg = {});
EnergyResult pws_sphere_plate(const Material& body_a, const Material& sphere_b, double center,
                              double R, const QuadratureConfig& cfg = {});

// Dispatches to the matching closed-form routine above.
EnergyResult pws_closed_form(const geometry::Spec& spec, const Material& body_a,
                             const Material& body_b, const QuadratureConfig& cfg = {});

// Retarded (static-response) power laws; uses the polarizabilities at u = 0.
EnergyResult pws_long_range(const geometry::Spec& spec, const Material& body_a,
                            const Material& body_b);

// 1 - (1 + e)^-4 with e = e_A / L.
double atom_slab_thickness_factor(double e_rel);
// 1 - (1 + e_A)^-3 - (1 + e_B)^-3 + (1 + e_A + e_B)^-3, thicknesses relative to L.
double slab_slab_thickness_factor(double e_a_rel, double e_b_rel);

// Brute-force PWS: nested quadrature of the atom-atom energy over the bodies'
// volumes. Plates are integrated over their full semi-infinite extent.
EnergyResult oracle_pws(const geometry::Spec& spec, const Material& body_a,
                        const Material& body_b, const QuadratureConfig& cfg = {});

}  // namespace casimir::pws
