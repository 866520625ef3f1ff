#pragma once

// Incomplete gamma function Gamma(0, x) and the chain of primitives
// d, e, f, g, h, i, j built from it. Each primitive has the shape
//
//   p(x) = P(x) Gamma(0, x) + e^{-x} Q(x)
//
// with P a polynomial and Q a Laurent polynomial, and each one is the
// derivative of the next: e' = d, f' = e, ..., j' = i. All vanish at infinity.

#include <array>
#include <string_view>

namespace casimir::specfun {

enum class PrimitiveKind { D, E, F, G, H, I, J };

inline constexpr std::array<PrimitiveKind, 7> kAllPrimitives = {
    PrimitiveKind::D, PrimitiveKind::E, PrimitiveKind::F, PrimitiveKind::G,
    PrimitiveKind::H, PrimitiveKind::I, PrimitiveKind::J};

std::string_view name(PrimitiveKind kind);

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Above this abscissa the primitives use the cancellation-free large-x form.
inline constexpr double kLargeXSwitch = 3.0;

// Gamma(0, x) = E_1(x). Throws std::domain_error for x <= 0.
double gamma0(double x);

// e^x Gamma(0, x), finite for all x > 0 without underflow.
double gamma0_scaled(double x);

// Closed-form value of the primitive. Throws std::domain_error for x <= 0,
// except J which accepts x = 0 (j(0) = -23/15).
double primitive(PrimitiveKind kind, double x);

// Order of the pole at x = 0 (0 for the logarithmic I and the finite J).
int pole_order(PrimitiveKind kind);

// x^m p(x) with m = pole_order(kind). Finite down to and including x = 0
// for D..H and J; the integrands of the energy formulas are built on these.
double primitive_scaled(PrimitiveKind kind, double x);

// The two evaluation schemes behind primitive(), exposed for the overlap test.
// primitive_large_x requires x >= 1.
double primitive_direct(PrimitiveKind kind, double x);
double primitive_large_x(PrimitiveKind kind, double x);

// Central difference of the successor primitive at x minus primitive(kind).
// Throws std::invalid_argument for kind = J, or when h is outside (0, x/10).
double primitive_chain_check(PrimitiveKind kind, double x, double h);

}  // namespace casimir::specfun
