#include "casimir/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir::specfun {

namespace {

constexpr int kMinPower = -5;
constexpr int kMaxPower = 4;

// P(x) Gamma(0,x) + e^{-x} Q(x); q[k - kMinPower] is the coefficient of x^k.
struct PrimitiveForm {
  std::array<double, 6> p{};
  std::array<double, kMaxPower - kMinPower + 1> q{};
  int pole = 0;

  double q_at(int power) const {
    if (power < kMinPower || power > kMaxPower) return 0.0;
    return q[static_cast<std::size_t>(power - kMinPower)];
  }
};

PrimitiveForm make_form(std::initializer_list<double> p,
                        std::initializer_list<std::pair<int, double>> q, int pole) {
  PrimitiveForm f;
  std::size_t i = 0;
  for (double c : p) f.p[i++] = c;
  for (const auto& [power, c] : q) f.q[static_cast<std::size_t>(power - kMinPower)] = c;
  f.pole = pole;
  return f;
}

const PrimitiveForm& form(PrimitiveKind kind) {
  static const std::array<PrimitiveForm, 7> forms = {
      // d
      make_form({}, {{-1, -1.0}, {-2, -4.0}, {-3, -20.0}, {-4, -48.0}, {-5, -48.0}}, 5),
      // e
      make_form({1.0}, {{-2, 4.0}, {-3, 12.0}, {-4, 12.0}}, 4),
      // f
      make_form({0.0, 1.0}, {{0, -1.0}, {-2, -4.0}, {-3, -4.0}}, 3),
      // g
      make_form({-2.0, 0.0, 0.5}, {{1, -0.5}, {0, 0.5}, {-1, 2.0}, {-2, 2.0}}, 2),
      // h
      make_form({0.0, -2.0, 0.0, 1.0 / 6.0},
                {{2, -1.0 / 6.0}, {1, 1.0 / 6.0}, {0, 5.0 / 3.0}, {-1, -2.0}}, 1),
      // i
      make_form({2.0, 0.0, -1.0, 0.0, 1.0 / 24.0},
                {{3, -1.0 / 24.0}, {2, 1.0 / 24.0}, {1, 11.0 / 12.0}, {0, -0.75}}, 0),
      // j
      make_form({0.0, 2.0, 0.0, -1.0 / 3.0, 0.0, 1.0 / 120.0},
                {{4, -1.0 / 120.0}, {3, 1.0 / 120.0}, {2, 19.0 / 60.0},
                 {1, -17.0 / 60.0}, {0, -23.0 / 15.0}},
                0),
  };
  return forms[static_cast<std::size_t>(kind)];
}

// Large-x form. Writing e^x Gamma(0,x) = sum_{n<N} (-1)^n n! x^{-n-1}
// + (-1)^N N! x^{-N} e^x E_{N+1}(x) turns e^x p(x) into a Laurent polynomial
// plus P(x) times that remainder. The non-negative powers of the Laurent part
// cancel against Q exactly; the cancellation is done in integers (all table
// coefficients are multiples of 1/120) so nothing is lost to rounding.
constexpr long long kDenominator = 120;

struct TailForm {
  int order = 0;  // N
  std::vector<double> laurent;  // laurent[k] multiplies x^{-(k+1)}
};

TailForm make_tail(PrimitiveKind kind) {
  const PrimitiveForm& f = form(kind);
  int degree = 0;
  for (int j = 0; j < static_cast<int>(f.p.size()); ++j)
    if (f.p[static_cast<std::size_t>(j)] != 0.0) degree = j;
  TailForm t;
  t.order = std::max(degree + 2, -kMinPower);
  const int lowest = -t.order;
  const int highest = kMaxPower;
  std::vector<long long> c(static_cast<std::size_t>(highest - lowest + 1), 0);
  auto at = [&](int power) -> long long& { return c[static_cast<std::size_t>(power - lowest)]; };
  auto scaled = [](double v) { return std::llround(v * kDenominator); };
  for (int k = kMinPower; k <= kMaxPower; ++k) at(k) += scaled(f.q_at(k));
  long long factorial = 1;
  for (int n = 0; n < t.order; ++n) {
    if (n > 0) factorial *= n;
    const long long sign = n % 2 == 0 ? 1 : -1;
    for (int j = 0; j < static_cast<int>(f.p.size()); ++j) {
      const long long pj = scaled(f.p[static_cast<std::size_t>(j)]);
      if (pj != 0) at(j - n - 1) += sign * factorial * pj;
    }
  }
  for (int power = 0; power <= highest; ++power)
    if (at(power) != 0)
      throw std::logic_error("primitive table: growing terms do not cancel at large x");
  for (int power = -1; power >= lowest; --power)
    t.laurent.push_back(static_cast<double>(at(power)) / kDenominator);
  return t;
}

const TailForm& tail(PrimitiveKind kind) {
  static const std::array<TailForm, 7> table = [] {
    std::array<TailForm, 7> t;
    for (PrimitiveKind k : kAllPrimitives) t[static_cast<std::size_t>(k)] = make_tail(k);
    return t;
  }();
  return table[static_cast<std::size_t>(kind)];
}

// e^x E_n(x) by the continued fraction, x >= 1.
double en_continued_fraction_scaled(int n, double x) {
  constexpr double tiny = 1e-300;
  double b = x + n;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * (n - 1 + i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

double polynomial(const std::array<double, 6>& p, double x);

// e^x p(x) x^m from the large-x form.
double tail_bracket(PrimitiveKind kind, double x, int m) {
  const PrimitiveForm& f = form(kind);
  const TailForm& t = tail(kind);
  double laurent = 0.0;
  for (std::size_t k = t.laurent.size(); k-- > 0;) laurent = (laurent + t.laurent[k]) / x;
  const double sign = t.order % 2 == 0 ? 1.0 : -1.0;
  const double remainder = sign * std::tgamma(t.order + 1.0) * std::pow(x, -t.order) *
                           polynomial(f.p, x) * en_continued_fraction_scaled(t.order + 1, x);
  return (laurent + remainder) * std::pow(x, m);
}

double polynomial(const std::array<double, 6>& p, double x) {
  double s = 0.0;
  for (std::size_t j = p.size(); j-- > 0;) s = s * x + p[j];
  return s;
}

// e^x p(x) x^m from the closed form.
double direct_bracket(const PrimitiveForm& f, double x, int m) {
  double s = polynomial(f.p, x) * gamma0_scaled(x) * std::pow(x, m);
  for (int k = kMinPower; k <= kMaxPower; ++k) {
    const double c = f.q_at(k);
    if (c != 0.0) s += c * std::pow(x, k + m);
  }
  return s;
}

void require_positive(PrimitiveKind kind, double x) {
  if (!(x > 0.0))
    throw std::domain_error(std::string("primitive ") + std::string(name(kind)) +
                            " diverges at x <= 0");
}

}  // namespace

std::string_view name(PrimitiveKind kind) {
  static constexpr std::array<std::string_view, 7> names = {"d", "e", "f", "g", "h", "i", "j"};
  return names[static_cast<std::size_t>(kind)];
}

namespace {

// -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!), used for x < 1.
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -x / k;
    const double add = -term / k;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// e^x E_1(x) by modified Lentz evaluation of the continued fraction, x >= 1.
double e1_continued_fraction_scaled(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace

double gamma0_scaled(double x) {
  if (!(x > 0.0)) throw std::domain_error("Gamma(0, x) requires x > 0");
  if (x < 1.0) return std::exp(x) * e1_series(x);
  return e1_continued_fraction_scaled(x);
}

double gamma0(double x) {
  if (!(x > 0.0)) throw std::domain_error("Gamma(0, x) requires x > 0");
  if (x < 1.0) return e1_series(x);
  return std::exp(-x) * e1_continued_fraction_scaled(x);
}

int pole_order(PrimitiveKind kind) { return form(kind).pole; }

double primitive_direct(PrimitiveKind kind, double x) {
  require_positive(kind, x);
  return std::exp(-x) * direct_bracket(form(kind), x, 0);
}

double primitive_large_x(PrimitiveKind kind, double x) {
  require_positive(kind, x);
  if (x < 1.0) throw std::domain_error("large-x form needs x >= 1");
  return std::exp(-x) * tail_bracket(kind, x, 0);
}

double primitive(PrimitiveKind kind, double x) {
  if (kind == PrimitiveKind::J && x == 0.0) return -23.0 / 15.0;
  require_positive(kind, x);
  if (x > kLargeXSwitch) return primitive_large_x(kind, x);
  return primitive_direct(kind, x);
}

double primitive_scaled(PrimitiveKind kind, double x) {
  const PrimitiveForm& f = form(kind);
  const int m = f.pole;
  if (x == 0.0) {
    if (kind == PrimitiveKind::I) throw std::domain_error("primitive i diverges at x = 0");
    return f.q_at(-m);
  }
  require_positive(kind, x);
  const double decay = std::exp(-x);
  if (decay == 0.0) return 0.0;
  if (x > kLargeXSwitch) return decay * tail_bracket(kind, x, m);
  return decay * direct_bracket(f, x, m);
}

double primitive_chain_check(PrimitiveKind kind, double x, double h) {
  if (kind == PrimitiveKind::J)
    throw std::invalid_argument("primitive j has no successor in the chain");
  if (!(x > 0.0) || !(h > 0.0) || !(h < x / 10.0))
    throw std::invalid_argument("chain check needs x > 0 and 0 < h < x/10");
  const auto next = static_cast<PrimitiveKind>(static_cast<int>(kind) + 1);
  const double derivative = (primitive(next, x + h) - primitive(next, x - h)) / (2.0 * h);
  return derivative - primitive(kind, x);
}

}  // namespace casimir::specfun
