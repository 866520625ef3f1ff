#include "casimir/materials.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace casimir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double lorentz(double u, double u_res) {
  const double r = u / u_res;
  return 1.0 / (1.0 + r * r);
}

void require_density(double n_v) {
  if (!(n_v > 0.0) || !std::isfinite(n_v))
    throw std::domain_error("number density must be finite and > 0");
}

}  // namespace

ReducedPolarizability alpha_from_eps_cm(double eps, double n_v) {
  if (!(eps >= 1.0)) throw std::domain_error("Clausius-Mossotti needs eps >= 1");
  require_density(n_v);
  const double ratio = std::isinf(eps) ? 1.0 : (eps - 1.0) / (eps + 2.0);
  return {3.0 / (4.0 * std::numbers::pi * n_v) * ratio};
}

double eps_from_alpha_cm(ReducedPolarizability a, double n_v) {
  require_density(n_v);
  if (!(a.value >= 0.0)) throw std::domain_error("polarizability must be >= 0");
  const double y = 4.0 * std::numbers::pi / 3.0 * n_v * a.value;
  if (y >= 1.0)
    throw PolarizationCatastrophe("(4 pi / 3) n_v a >= 1: no finite permittivity");
  return (1.0 + 2.0 * y) / (1.0 - y);
}

double eps_dilute_first_order(ReducedPolarizability a, double n_v) {
  return 1.0 + 4.0 * std::numbers::pi * n_v * a.value;
}

Material::Material(material::Model model, double n_v) : model_(model), n_v_(n_v) {
  require_density(n_v);
  std::visit(overloaded{
                 [](const material::Static& m) {
                   if (!(m.eps0 >= 1.0)) throw std::domain_error("eps0 must be >= 1");
                 },
                 [](const material::LorentzEps& m) {
                   if (!(m.eps0 >= 1.0)) throw std::domain_error("eps0 must be >= 1");
                   if (!(m.u_res > 0.0)) throw std::domain_error("u_res must be > 0");
                 },
                 [](const material::StaticAlpha& m) {
                   if (!(m.a0 >= 0.0)) throw std::domain_error("a0 must be >= 0");
                 },
                 [](const material::LorentzAlpha& m) {
                   if (!(m.a0 >= 0.0)) throw std::domain_error("a0 must be >= 0");
                   if (!(m.u_res > 0.0)) throw std::domain_error("u_res must be > 0");
                 },
                 [](const material::PerfectMirror&) {},
             },
             model_);
}

double Material::eps_iu(double u) const {
  return std::visit(
      overloaded{
          [](const material::Static& m) { return m.eps0; },
          [u](const material::LorentzEps& m) { return 1.0 + (m.eps0 - 1.0) * lorentz(u, m.u_res); },
          [this](const material::StaticAlpha& m) { return eps_from_alpha_cm({m.a0}, n_v_); },
          [this, u](const material::LorentzAlpha& m) {
            return eps_from_alpha_cm({m.a0 * lorentz(u, m.u_res)}, n_v_);
          },
          [](const material::PerfectMirror&) { return std::numeric_limits<double>::infinity(); },
      },
      model_);
}

ReducedPolarizability Material::alpha_iu(double u) const {
  return std::visit(
      overloaded{
          [this](const material::Static& m) { return alpha_from_eps_cm(m.eps0, n_v_); },
          [this, u](const material::LorentzEps& m) {
            return alpha_from_eps_cm(1.0 + (m.eps0 - 1.0) * lorentz(u, m.u_res), n_v_);
          },
          [](const material::StaticAlpha& m) { return ReducedPolarizability{m.a0}; },
          [u](const material::LorentzAlpha& m) {
            return ReducedPolarizability{m.a0 * lorentz(u, m.u_res)};
          },
          [this](const material::PerfectMirror&) {
            return ReducedPolarizability{3.0 / (4.0 * std::numbers::pi * n_v_)};
          },
      },
      model_);
}

bool Material::is_static() const {
  return std::holds_alternative<material::Static>(model_) ||
         std::holds_alternative<material::StaticAlpha>(model_) ||
         std::holds_alternative<material::PerfectMirror>(model_);
}

Material Material::static_limit() const {
  return std::visit(overloaded{
                        [&](const material::LorentzEps& m) {
                          return Material(material::Static{m.eps0}, n_v_);
                        },
                        [&](const material::LorentzAlpha& m) {
                          return Material(material::StaticAlpha{m.a0}, n_v_);
                        },
                        [&](const auto&) { return *this; },
                    },
                    model_);
}

bool Material::is_perfect_mirror() const {
  return std::holds_alternative<material::PerfectMirror>(model_);
}

std::string Material::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const material::Static& m) { os << "static eps0=" << m.eps0; },
                 [&](const material::LorentzEps& m) {
                   os << "lorentz eps0=" << m.eps0 << " u_res=" << m.u_res;
                 },
                 [&](const material::StaticAlpha& m) { os << "static alpha a0=" << m.a0; },
                 [&](const material::LorentzAlpha& m) {
                   os << "lorentz alpha a0=" << m.a0 << " u_res=" << m.u_res;
                 },
                 [&](const material::PerfectMirror&) { os << "perfect mirror"; },
             },
             model_);
  os << " n_v=" << n_v_;
  return os.str();
}

}  // namespace casimir
