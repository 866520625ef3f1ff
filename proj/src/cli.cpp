#include "casimir/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "casimir/energy.hpp"
#include "casimir/exact.hpp"
#include "casimir/materials.hpp"
#include "casimir/pws.hpp"
#include "casimir/ratios.hpp"
#include "casimir/report.hpp"
#include "casimir/validation.hpp"

namespace casimir::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaterialFlags {
  std::optional<double> eps;
  std::optional<std::string> eps_lorentz;
  std::optional<double> alpha;
  double n_v = 1.0;
  bool perfect_mirror = false;
};

struct GeometryFlags {
  std::string geometry;
  std::optional<double> L, e_A, e_B, R, center;
};

struct OutputFlags {
  std::optional<std::string> out;
  std::string format = "csv";
  double rel_tol = 1e-10;
  unsigned jobs = 1;
  std::optional<double> unit_length;
};

struct RatioSweepFlags {
  bool ratio = false;
  std::size_t points = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> e_rel;
  std::optional<double> l_over_r;
};

const std::vector<std::string> kGeometries = {"atom-atom",   "atom-slab",  "atom-plate",
                                              "slab-slab",   "plate-plate", "sphere-slab",
                                              "sphere-plate"};
const std::vector<std::string> kMethods = {"pws-closed-form", "pws-oracle", "pws-long-range",
                                           "exact", "exact-long-range"};

void add_material_flags(CLI::App& app, MaterialFlags& m, bool with_response) {
  if (with_response) {
    auto* eps = app.add_option("--eps", m.eps, "static permittivity eps(0)");
    auto* lor = app.add_option("--eps-lorentz", m.eps_lorentz,
                               "single-resonance permittivity: <eps0>,<u_res>");
    auto* alpha = app.add_option("--alpha", m.alpha, "static reduced polarizability a0");
    auto* pm = app.add_flag("--perfect-mirror", m.perfect_mirror, "ideal reflector");
    eps->excludes(lor)->excludes(alpha)->excludes(pm);
    lor->excludes(alpha)->excludes(pm);
    alpha->excludes(pm);
  }
  app.add_option("--nv", m.n_v, "number density of constituents")->check(CLI::PositiveNumber);
}

void add_geometry_flags(CLI::App& app, GeometryFlags& g, const std::vector<std::string>& allowed) {
  app.add_option("--geometry", g.geometry, "geometry")
      ->required()
      ->check(CLI::IsMember(allowed));
  app.add_option("--L", g.L, "gap (atom-atom: separation)");
  app.add_option("--eA", g.e_A, "thickness of body A");
  app.add_option("--eB", g.e_B, "thickness of body B (defaults to --eA)");
  app.add_option("--R", g.R, "sphere radius");
  app.add_option("--Lcenter", g.center, "sphere center to slab distance");
}

void add_output_flags(CLI::App& app, OutputFlags& o) {
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--unit-length", o.unit_length, "length unit in meters; energies in SI")
      ->check(CLI::PositiveNumber);
}

Material build_material(const MaterialFlags& f) {
  if (f.perfect_mirror) return Material::perfect_mirror(f.n_v);
  if (f.eps) return Material::static_eps(*f.eps, f.n_v);
  if (f.alpha) return Material::static_alpha(*f.alpha, f.n_v);
  if (f.eps_lorentz) {
    std::istringstream is(*f.eps_lorentz);
    double eps0 = 0.0;
    double u_res = 0.0;
    char comma = 0;
    if (!(is >> eps0 >> comma >> u_res) || comma != ',' || !(is >> std::ws).eof())
      throw UsageError("--eps-lorentz expects <eps0>,<u_res>, got '" + *f.eps_lorentz + "'");
    return Material(material::LorentzEps{eps0, u_res}, f.n_v);
  }
  throw UsageError("a material is required: --eps, --eps-lorentz, --alpha or --perfect-mirror");
}

double need(const std::optional<double>& v, const char* flag, const std::string& geometry) {
  if (!v) throw UsageError(geometry + " requires " + flag);
  return *v;
}

geometry::Spec build_geometry(const GeometryFlags& g) {
  const std::string& k = g.geometry;
  if (k == "atom-atom") return geometry::AtomAtom{need(g.L, "--L", k)};
  if (k == "atom-plate") return geometry::AtomPlate{need(g.L, "--L", k)};
  if (k == "plate-plate") return geometry::PlatePlate{need(g.L, "--L", k)};
  if (k == "atom-slab") return geometry::AtomSlab{need(g.L, "--L", k), need(g.e_A, "--eA", k)};
  if (k == "slab-slab") {
    const double e_A = need(g.e_A, "--eA", k);
    return geometry::SlabSlab{need(g.L, "--L", k), e_A, g.e_B.value_or(e_A)};
  }
  const double R = need(g.R, "--R", k);
  if (g.center && g.L) throw UsageError(k + " takes either --Lcenter or --L, not both");
  if (!g.center && !g.L) throw UsageError(k + " requires --Lcenter or --L");
  const double center = g.center ? *g.center : *g.L + R;
  if (k == "sphere-plate") return geometry::SpherePlate{center, R};
  return geometry::SphereSlab{center, R, need(g.e_A, "--eA", k)};
}

Method parse_method(const std::string& s) {
  for (Method m : {Method::PwsClosedForm, Method::PwsOracle, Method::PwsLongRange, Method::Exact,
                   Method::ExactLongRange})
    if (name(m) == s) return m;
  throw UsageError("unknown method " + s);
}

std::optional<double> static_eps(const Material& m) {
  if (m.is_perfect_mirror()) return kInf;
  try {
    return m.eps_iu(0.0);
  } catch (const PolarizationCatastrophe&) {
    return std::nullopt;
  }
}

double gap(const geometry::Spec& spec) {
  return std::visit(
      [](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, geometry::AtomAtom>)
          return g.d;
        else if constexpr (std::is_same_v<T, geometry::SphereSlab> ||
                           std::is_same_v<T, geometry::SpherePlate>)
          return g.center - g.R;
        else
          return g.L;
      },
      spec);
}

std::optional<double> relative_thickness(const geometry::Spec& spec) {
  if (const auto* g = std::get_if<geometry::AtomSlab>(&spec)) return g->e_A / g->L;
  if (const auto* g = std::get_if<geometry::SlabSlab>(&spec)) return g->e_A / g->L;
  if (const auto* g = std::get_if<geometry::SphereSlab>(&spec)) return g->e_A / (g->center - g->R);
  return std::nullopt;
}

std::optional<double> gap_over_radius(const geometry::Spec& spec) {
  if (const auto* g = std::get_if<geometry::SphereSlab>(&spec)) return (g->center - g->R) / g->R;
  if (const auto* g = std::get_if<geometry::SpherePlate>(&spec)) return (g->center - g->R) / g->R;
  return std::nullopt;
}

EnergyResult compute(Method method, const geometry::Spec& spec, const Material& m,
                     const quad::QuadratureConfig& cfg) {
  switch (method) {
    case Method::PwsClosedForm: return pws::pws_closed_form(spec, m, m, cfg);
    case Method::PwsOracle: return pws::oracle_pws(spec, m, m, cfg);
    case Method::PwsLongRange: return pws::pws_long_range(spec, m, m);
    case Method::Exact: return exact::exact_energy(spec, m, m, cfg);
    case Method::ExactLongRange: {
      EnergyResult r = exact::exact_energy(spec, m.static_limit(), m.static_limit(), cfg);
      r.method = Method::ExactLongRange;
      return r;
    }
  }
  throw UsageError("unknown method");
}

bool is_pws(Method m) {
  return m == Method::PwsClosedForm || m == Method::PwsOracle || m == Method::PwsLongRange;
}

bool has_exact(const geometry::Spec& spec) {
  return !std::holds_alternative<geometry::AtomAtom>(spec) &&
         !std::holds_alternative<geometry::SphereSlab>(spec) &&
         !std::holds_alternative<geometry::SpherePlate>(spec);
}

double relative_error(const EnergyResult& r) {
  return r.value == 0.0 ? r.quadrature.error_estimate
                        : r.quadrature.error_estimate / std::abs(r.value);
}

// PWS / exact for the same geometry and material; long-range methods pair with
// each other. Spheres use the anchor limits and may have no ratio.
std::optional<double> energy_ratio(Method method, const geometry::Spec& spec, const Material& m,
                                   const EnergyResult& primary, const quad::QuadratureConfig& cfg,
                                   bool& converged) {
  if (auto lr = gap_over_radius(spec)) {
    if (std::holds_alternative<geometry::SphereSlab>(spec)) return std::nullopt;
    return ratios::ratio_sphere_pws_limits(m, *lr, {.L = gap(spec), .quadrature = cfg}).ratio;
  }
  if (!has_exact(spec)) return std::nullopt;
  const bool long_range = method == Method::PwsLongRange || method == Method::ExactLongRange;
  const Method partner = is_pws(method) ? (long_range ? Method::ExactLongRange : Method::Exact)
                                        : (long_range ? Method::PwsLongRange
                                                      : Method::PwsClosedForm);
  const EnergyResult other = compute(partner, spec, m, cfg);
  converged = converged && other.quadrature.converged;
  return is_pws(method) ? primary.value / other.value : other.value / primary.value;
}

// Energies scale as hbar c / length (total) or hbar c / length^3 (per area).
void apply_units(std::vector<report::Row>& rows, const std::optional<double>& unit,
                 bool per_area) {
  if (!unit) return;
  const double scale = kHbarC / (per_area ? std::pow(*unit, 3) : *unit);
  for (auto& r : rows) {
    if (r.value) *r.value *= scale;
    if (r.L) *r.L *= *unit;
  }
}

bool is_per_area_curve(ratios::Curve c) {
  return c == ratios::Curve::PlatePlate || c == ratios::Curve::SlabSlab;
}

ratios::Curve curve_from(const std::string& g) {
  if (g == "atom-plate") return ratios::Curve::AtomPlate;
  if (g == "atom-slab") return ratios::Curve::AtomSlab;
  if (g == "plate-plate") return ratios::Curve::PlatePlate;
  if (g == "slab-slab") return ratios::Curve::SlabSlab;
  if (g == "sphere-plate") return ratios::Curve::Sphere;
  throw UsageError("no ratio curve for geometry " + g);
}

// e_rel for slab curves and L/R for the sphere, from the explicit flag or the
// geometry lengths.
std::optional<double> curve_parameter(ratios::Curve c, const RatioSweepFlags& s,
                                      const GeometryFlags& g) {
  if (c == ratios::Curve::AtomSlab || c == ratios::Curve::SlabSlab) {
    if (s.e_rel) return s.e_rel;
    if (g.e_A) return *g.e_A / g.L.value_or(1.0);
    throw UsageError(g.geometry + " sweep requires --e-rel or --eA");
  }
  if (c == ratios::Curve::Sphere) {
    if (s.l_over_r) return s.l_over_r;
    if (g.R && g.L) return *g.L / *g.R;
    throw UsageError("sphere-plate sweep requires --l-over-r or --L with --R");
  }
  return std::nullopt;
}

// Ratio sweeps report the PWS long-range energy with the ratio; without
// --ratio the exact side is reported instead (PWS for the sphere).
report::Row sweep_row(const ratios::RatioPoint& p, bool with_ratio, ratios::Curve c) {
  if (with_ratio || c == ratios::Curve::Sphere) {
    report::Row r = report::from_ratio_point(p, std::string(name(Method::PwsLongRange)));
    if (!with_ratio) r.ratio.reset();
    return r;
  }
  report::Row r = report::from_ratio_point(p, std::string(name(Method::ExactLongRange)));
  r.value = p.exact_value;
  r.ratio.reset();
  return r;
}

int finish(const std::vector<report::Row>& rows, const OutputFlags& o, std::ostream& out,
           std::ostream& err) {
  const auto fmt = o.format == "json" ? report::Format::Json : report::Format::Csv;
  std::optional<std::filesystem::path> dest;
  if (o.out) dest = *o.out;
  report::emit(rows, fmt, dest, out, err);
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.converged; });
  if (bad > 0) {
    err << "error: quadrature did not reach the requested tolerance for " << bad << " row(s)\n";
    return kNumerical;
  }
  return kOk;
}

quad::QuadratureConfig quadrature_from(const OutputFlags& o) {
  quad::QuadratureConfig cfg;
  cfg.rel_tol = o.rel_tol;
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise-summation and exact Casimir energies", "casimir_pws"};
  app.require_subcommand(1);

  MaterialFlags mat;
  GeometryFlags geo;
  OutputFlags outf;
  RatioSweepFlags sweep;
  std::string method_name = std::string(name(Method::PwsClosedForm));
  std::vector<int> only;

  auto* energy = app.add_subcommand("energy", "energy of one configuration");
  add_geometry_flags(*energy, geo, kGeometries);
  add_material_flags(*energy, mat, true);
  add_output_flags(*energy, outf);
  energy->add_option("--method", method_name, "evaluation method")->check(CLI::IsMember(kMethods));
  energy->add_flag("--ratio", sweep.ratio, "also report PWS / exact");

  const std::vector<std::string> curves = {"atom-plate", "atom-slab", "plate-plate", "slab-slab",
                                           "sphere-plate"};
  auto* sweep_eps = app.add_subcommand("sweep-eps", "long-range energies over a log grid of eps(0)");
  add_geometry_flags(*sweep_eps, geo, curves);
  add_material_flags(*sweep_eps, mat, false);
  add_output_flags(*sweep_eps, outf);
  sweep.points = ratios::kDefaultEpsPoints;
  sweep.lo = ratios::kDefaultEpsLo;
  sweep.hi = ratios::kDefaultEpsHi;
  sweep_eps->add_flag("--ratio", sweep.ratio, "report PWS / exact");
  sweep_eps->add_option("--points", sweep.points, "grid size");
  sweep_eps->add_option("--eps-min", sweep.lo, "lowest eps(0)")->check(CLI::Range(1.0, kInf));
  sweep_eps->add_option("--eps-max", sweep.hi, "highest eps(0)");
  sweep_eps->add_option("--e-rel", sweep.e_rel, "thickness relative to L")
      ->check(CLI::PositiveNumber);
  sweep_eps->add_option("--l-over-r", sweep.l_over_r, "gap over sphere radius")
      ->check(CLI::PositiveNumber);

  RatioSweepFlags thick;
  thick.points = 50;
  thick.lo = 0.01;
  thick.hi = 100.0;
  auto* sweep_thick =
      app.add_subcommand("sweep-thickness", "long-range energies over a log grid of e_A / L");
  add_geometry_flags(*sweep_thick, geo, {"atom-slab", "slab-slab"});
  add_material_flags(*sweep_thick, mat, true);
  add_output_flags(*sweep_thick, outf);
  sweep_thick->add_flag("--ratio", thick.ratio, "report PWS / exact");
  sweep_thick->add_option("--points", thick.points, "grid size");
  sweep_thick->add_option("--e-min", thick.lo, "smallest e_A / L")->check(CLI::PositiveNumber);
  sweep_thick->add_option("--e-max", thick.hi, "largest e_A / L")->check(CLI::PositiveNumber);

  double max_lo = 2.0;
  double max_hi = 100.0;
  auto* find_max = app.add_subcommand("find-max", "eps(0) maximizing the PWS / exact ratio");
  add_geometry_flags(*find_max, geo, {"atom-plate", "atom-slab", "plate-plate", "slab-slab"});
  add_material_flags(*find_max, mat, false);
  add_output_flags(*find_max, outf);
  find_max->add_option("--lo", max_lo, "bracket start")->check(CLI::Range(1.0, kInf));
  find_max->add_option("--hi", max_hi, "bracket end");
  find_max->add_option("--e-rel", sweep.e_rel, "thickness relative to L")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "run the reference-value suite");
  validate->add_option("--jobs", outf.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  validate->add_option("--only", only, "run only these check numbers")
      ->check(CLI::Range(1, validation::kCheckCount));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto cfg = quadrature_from(outf);

    if (energy->parsed()) {
      const Material m = build_material(mat);
      const geometry::Spec spec = build_geometry(geo);
      geometry::validate(spec);
      const Method method = parse_method(method_name);
      const EnergyResult r = compute(method, spec, m, cfg);
      report::Row row;
      row.geometry = std::string(geometry::name(spec));
      row.eps0 = static_eps(m);
      row.e_rel = relative_thickness(spec);
      if (auto g = gap_over_radius(spec)) row.l_over_r = *g;
      row.method = std::string(name(r.method));
      row.L = gap(spec);
      row.value = r.value;
      row.quad_error = relative_error(r);
      row.converged = r.quadrature.converged;
      if (sweep.ratio) row.ratio = energy_ratio(method, spec, m, r, cfg, row.converged);
      std::vector<report::Row> rows{row};
      apply_units(rows, outf.unit_length, geometry::is_per_area(spec));
      return finish(rows, outf, out, err);
    }

    if (sweep_eps->parsed()) {
      const ratios::Curve c = curve_from(geo.geometry);
      const auto param = curve_parameter(c, sweep, geo);
      if (!(sweep.hi > sweep.lo)) throw UsageError("--eps-max must exceed --eps-min");
      std::vector<double> grid;
      if (sweep.points > 0) grid = ratios::log_grid(sweep.lo, sweep.hi, sweep.points);
      const ratios::RatioOptions opt{.L = geo.L.value_or(1.0), .n_v = mat.n_v, .quadrature = cfg};
      const auto pts = ratios::parallel_map(
          grid.size(),
          [&](std::size_t i) {
            return ratios::ratio_point(c, Material::static_eps(grid[i], mat.n_v), param, opt);
          },
          outf.jobs);
      std::vector<report::Row> rows;
      for (const auto& p : pts) rows.push_back(sweep_row(p, sweep.ratio, c));
      apply_units(rows, outf.unit_length, is_per_area_curve(c));
      return finish(rows, outf, out, err);
    }

    if (sweep_thick->parsed()) {
      const ratios::Curve c = curve_from(geo.geometry);
      const Material m = build_material(mat);
      if (!(thick.hi > thick.lo)) throw UsageError("--e-max must exceed --e-min");
      std::vector<double> grid;
      if (thick.points > 0) grid = ratios::log_grid(thick.lo, thick.hi, thick.points);
      const ratios::RatioOptions opt{.L = geo.L.value_or(1.0), .n_v = mat.n_v, .quadrature = cfg};
      const auto pts = ratios::parallel_map(
          grid.size(), [&](std::size_t i) { return ratios::ratio_point(c, m, grid[i], opt); },
          outf.jobs);
      std::vector<report::Row> rows;
      for (const auto& p : pts) rows.push_back(sweep_row(p, thick.ratio, c));
      apply_units(rows, outf.unit_length, is_per_area_curve(c));
      return finish(rows, outf, out, err);
    }

    if (find_max->parsed()) {
      const ratios::Curve c = curve_from(geo.geometry);
      const auto param = curve_parameter(c, sweep, geo);
      const ratios::RatioOptions opt{.L = geo.L.value_or(1.0), .n_v = mat.n_v, .quadrature = cfg};
      auto curve = [&](double eps) {
        return *ratios::ratio_point(c, Material::static_eps(eps, mat.n_v), param, opt).ratio;
      };
      const auto ext = ratios::find_extremum(curve, max_lo, max_hi);
      if (ext.brackets.size() > 1) {
        err << "warning: " << ext.brackets.size() << " local maxima in the scan:";
        for (const auto& [a, b] : ext.brackets) err << " [" << a << ", " << b << "]";
        err << '\n';
      }
      const auto p = ratios::ratio_point(c, Material::static_eps(ext.x, mat.n_v), param, opt);
      std::vector<report::Row> rows{sweep_row(p, true, c)};
      apply_units(rows, outf.unit_length, is_per_area_curve(c));
      return finish(rows, outf, out, err);
    }

    if (validate->parsed()) {
      std::vector<validation::CheckResult> results;
      if (only.empty()) {
        results = validation::run_all(outf.jobs);
      } else {
        for (int id : only) results.push_back(validation::run_check(id, outf.jobs));
      }
      validation::print(out, results);
      return validation::all_passed(results) ? kOk : kValidationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const report::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const ratios::BracketError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const quad::EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace casimir::cli
