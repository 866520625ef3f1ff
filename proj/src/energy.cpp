#include "casimir/energy.hpp"

#include <cmath>

namespace casimir {

namespace geometry {

namespace {

void positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw GeometryError(std::string(what) + " must be finite and > 0");
}

}  // namespace

void validate(const Spec& spec) {
  std::visit(
      [](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, AtomAtom>) {
          positive(g.d, "d");
        } else if constexpr (std::is_same_v<T, AtomSlab>) {
          positive(g.L, "L");
          positive(g.e_A, "e_A");
        } else if constexpr (std::is_same_v<T, AtomPlate> || std::is_same_v<T, PlatePlate>) {
          positive(g.L, "L");
        } else if constexpr (std::is_same_v<T, SlabSlab>) {
          positive(g.L, "L");
          positive(g.e_A, "e_A");
          positive(g.e_B, "e_B");
        } else {
          positive(g.R, "R");
          positive(g.center, "center distance");
          if constexpr (std::is_same_v<T, SphereSlab>) positive(g.e_A, "e_A");
          if (!(g.center > g.R))
            throw GeometryError("sphere touches or penetrates the slab (center <= R)");
        }
      },
      spec);
}

std::string_view name(const Spec& spec) {
  static constexpr std::string_view names[] = {"atom-atom",  "atom-slab",   "atom-plate",
                                               "slab-slab",  "plate-plate", "sphere-slab",
                                               "sphere-plate"};
  return names[spec.index()];
}

bool is_per_area(const Spec& spec) {
  return std::holds_alternative<SlabSlab>(spec) || std::holds_alternative<PlatePlate>(spec);
}

}  // namespace geometry

std::string_view name(Method m) {
  switch (m) {
    case Method::PwsClosedForm: return "pws-closed-form";
    case Method::PwsOracle: return "pws-oracle";
    case Method::PwsLongRange: return "pws-long-range";
    case Method::Exact: return "exact";
    case Method::ExactLongRange: return "exact-long-range";
  }
  return "unknown";
}

}  // namespace casimir
