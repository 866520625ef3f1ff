#pragma once

#include <stdexcept>
#include <string_view>
#include <variant>

#include "casimir/quadrature.hpp"

namespace casimir {

// Geometries. Lengths are in the reduced unit; `center` is the distance from
// the sphere center to the near face of the slab, so the gap is center - R.
namespace geometry {

struct AtomAtom {
  double d;
};
struct AtomSlab {
  double L, e_A;
};
struct AtomPlate {
  double L;
};
struct SlabSlab {
  double L, e_A, e_B;
};
struct PlatePlate {
  double L;
};
struct SphereSlab {
  double center, R, e_A;
};
struct SpherePlate {
  double center, R;
};

using Spec = std::variant<AtomAtom, AtomSlab, AtomPlate, SlabSlab, PlatePlate, SphereSlab,
                          SpherePlate>;

// Throws GeometryError on non-positive lengths or sphere overlap.
void validate(const Spec& spec);
std::string_view name(const Spec& spec);
bool is_per_area(const Spec& spec);

}  // namespace geometry

class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Method { PwsClosedForm, PwsOracle, PwsLongRange, Exact, ExactLongRange };
enum class PerUnit { Total, PerArea };

std::string_view name(Method m);

// Energy in units of hbar c / length (total) or hbar c / length^3 (per area).
// Attraction is negative.
struct EnergyResult {
  double value = 0.0;
  PerUnit per_unit = PerUnit::Total;
  Method method = Method::PwsClosedForm;
  quad::IntegralResult quadrature{};
};

}  // namespace casimir
