#include "casimir/validation.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "casimir/exact.hpp"
#include "casimir/pws.hpp"
#include "casimir/ratios.hpp"
#include "casimir/specfun.hpp"

namespace casimir::validation {

namespace {

using std::numbers::pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Accumulates sub-checks; the check passes only if all of them do.
class Tally {
 public:
  void abs_near(const std::string& what, double got, double want, double tol) {
    record(std::abs(got - want) <= tol,
           what + "=" + num(got) + " (want " + num(want) + " +- " + num(tol) + ")");
  }
  void rel_near(const std::string& what, double got, double want, double tol) {
    const double rel = std::abs(got / want - 1.0);
    record(rel <= tol, what + " rel.dev " + num(rel) + " (tol " + num(tol) + ")");
  }
  void in_range(const std::string& what, double got, double lo, double hi) {
    record(got >= lo && got <= hi,
           what + "=" + num(got) + " (want [" + num(lo) + ", " + num(hi) + "])");
  }
  void require(bool cond, const std::string& what) { record(cond, what); }
  // Worst case over a family: one line reports the maximum.
  void worst_rel(const std::string& what, double worst, double tol) {
    record(worst <= tol, what + " worst rel.dev " + num(worst) + " (tol " + num(tol) + ")");
  }

  bool ok() const { return ok_; }
  std::string detail() const { return detail_.str(); }

 private:
  void record(bool pass, const std::string& line) {
    ok_ = ok_ && pass;
    if (!first_) detail_ << "; ";
    first_ = false;
    detail_ << (pass ? "" : "FAILED ") << line;
  }

  bool ok_ = true;
  bool first_ = true;
  std::ostringstream detail_;
};

double rel_dev(double got, double want) { return std::abs(got / want - 1.0); }

double atom_plate_curve(double eps) { return *ratios::ratio_atom_plate_lr(eps).ratio; }
double plate_plate_curve(double eps) { return *ratios::ratio_plate_plate_lr(eps).ratio; }

void perfect_mirror_atom_plate(Tally& t, unsigned) {
  t.abs_near("ratio(eps=1e8)", atom_plate_curve(1e8), 1.15, 1e-4);
  t.abs_near("ratio(perfect mirror)",
             *ratios::ratio_atom_plate_lr(Material::perfect_mirror()).ratio, 1.15, 1e-4);
}

void atom_plate_maximum(Tally& t, unsigned) {
  const auto ext = ratios::find_extremum(atom_plate_curve, 2.0, 100.0);
  t.abs_near("eps*", ext.x, 14.9, 0.3);
  t.abs_near("max ratio", ext.value, 1.321, 0.003);
  t.require(ext.brackets.size() == 1,
            "single local maximum in scan (" + std::to_string(ext.brackets.size()) + ")");
}

void silicon_point(Tally& t, unsigned) {
  t.abs_near("ratio(11.87)", atom_plate_curve(11.87), 1.319, 0.003);
}

void perfect_mirror_plate_plate(Tally& t, unsigned) {
  const double want = 621.0 / (8.0 * std::pow(pi, 4));
  t.abs_near("ratio(perfect mirror)",
             *ratios::ratio_plate_plate_lr(Material::perfect_mirror()).ratio, want, 1e-3);
  t.abs_near("ratio(eps=1e10)", plate_plate_curve(1e10), want, 1e-3);
}

void casimir_limit(Tally& t, unsigned) {
  const Material pm = Material::perfect_mirror();
  for (double L : {1.0, 3.0}) {
    const double want = -pi * pi / (720.0 * L * L * L);
    t.rel_near("E(L=" + num(L) + ")", exact::exact_plate_plate(pm, L).value, want, 1e-8);
  }
}

void plate_plate_maximum(Tally& t, unsigned jobs) {
  const auto grid = ratios::log_grid(ratios::kDefaultEpsLo, ratios::kDefaultEpsHi,
                                     ratios::kDefaultEpsPoints);
  const auto pts = ratios::parallel_map(
      grid.size(), [&](std::size_t i) { return ratios::ratio_plate_plate_lr(grid[i]); }, jobs);
  std::vector<double> ys;
  std::size_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ys.push_back(*pts[i].ratio);
    if (ys[i] > ys[best]) best = i;
  }
  const auto ext = ratios::find_extremum(plate_plate_curve, grid[std::max<std::size_t>(best, 1) - 1],
                                         grid[std::min(best + 1, grid.size() - 1)]);
  t.in_range("max ratio", std::max(ext.value, ys[best]), 1.55, 1.65);
  const auto crossings = ratios::sign_changes(grid, ys, 1.0);
  t.require(crossings.size() == 1,
            "ratio-1 sign changes: " + std::to_string(crossings.size()) + " (want 1)");
  if (crossings.size() == 1) {
    t.require(crossings[0].first >= 30.0 && crossings[0].second <= 1000.0,
              "crossing in [" + num(crossings[0].first) + ", " + num(crossings[0].second) +
                  "] (want inside [30, 1000])");
  }
}

void thickness_factors(Tally& t, unsigned) {
  const Material atom = Material::static_alpha(0.01);
  const double L = 1.0;
  double worst_as = 0.0;
  double worst_ss = 0.0;
  double worst_pm_as = 0.0;
  double worst_pm_ss = 0.0;
  const double bulk_as = atom_plate_curve(1e8);
  const double bulk_ss = plate_plate_curve(1e8);
  for (double e : {0.1, 1.0, 10.0}) {
    const double as = pws::pws_atom_slab(atom, atom, L, e * L).value /
                      pws::pws_atom_plate(atom, atom, L).value;
    worst_as = std::max(worst_as, rel_dev(as, pws::atom_slab_thickness_factor(e)));
    const double ss = pws::pws_slab_slab(atom, atom, L, e * L, e * L).value /
                      pws::pws_plate_plate(atom, atom, L).value;
    worst_ss = std::max(worst_ss, rel_dev(ss, pws::slab_slab_thickness_factor(e, e)));
    // PWS/exact of the slab relative to the bulk ratio at large eps.
    const double pm_as = *ratios::ratio_atom_slab_lr(1e8, e).ratio / bulk_as;
    worst_pm_as = std::max(worst_pm_as, std::abs(pm_as - pws::atom_slab_thickness_factor(e)));
    const double pm_ss = *ratios::ratio_slab_slab_lr(1e8, e).ratio / bulk_ss;
    worst_pm_ss = std::max(worst_pm_ss, std::abs(pm_ss - pws::slab_slab_thickness_factor(e, e)));
  }
  t.worst_rel("atom-slab/atom-plate PWS", worst_as, 1e-8);
  t.worst_rel("slab-slab/plate-plate PWS", worst_ss, 1e-8);
  t.require(worst_pm_as <= 1e-3, "atom-slab ratio/bulk ratio at eps=1e8 worst abs.dev " +
                                     num(worst_pm_as) + " (tol 0.001)");
  t.require(worst_pm_ss <= 1e-3, "slab-slab ratio/bulk ratio at eps=1e8 worst abs.dev " +
                                     num(worst_pm_ss) + " (tol 0.001)");
}

void oracle_equivalence(Tally& t, unsigned) {
  const Material m = Material::static_alpha(0.01);
  const Material lorentz{material::LorentzAlpha{0.01, 2.0}};
  quad::QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  using geometry::AtomSlab, geometry::SlabSlab, geometry::SphereSlab;
  const std::vector<std::pair<std::string, std::vector<geometry::Spec>>> families = {
      {"atom-slab", {AtomSlab{1, 1}, AtomSlab{0.5, 3}, AtomSlab{2, 0.1}, AtomSlab{0.1, 0.1},
                     AtomSlab{5, 20}}},
      {"slab-slab", {SlabSlab{1, 0.5, 2}, SlabSlab{0.2, 1, 1}, SlabSlab{3, 0.1, 10},
                     SlabSlab{1, 1, 1}, SlabSlab{0.5, 5, 0.3}}},
      {"sphere-slab", {SphereSlab{2, 1, 1}, SphereSlab{5, 0.5, 2}, SphereSlab{1.2, 1, 0.5},
                       SphereSlab{3, 2, 4}, SphereSlab{10, 1, 1}}},
  };
  for (const auto& [label, specs] : families) {
    double worst = 0.0;
    int count = 0;
    for (const auto& spec : specs) {
      for (const Material* mat : {&m, &lorentz}) {
        const double closed = pws::pws_closed_form(spec, *mat, *mat).value;
        const double oracle = pws::oracle_pws(spec, *mat, *mat, cfg).value;
        worst = std::max(worst, rel_dev(closed, oracle));
        ++count;
      }
    }
    t.worst_rel(label + " (" + std::to_string(count) + " points)", worst, 1e-6);
  }
}

void reflection_path(Tally& t, unsigned) {
  const Material stat = Material::static_alpha(0.01);
  const double u_res = 2.0;
  const Material lorentz{material::LorentzAlpha{0.01, u_res}};
  t.rel_near("static L=1 e=1", exact::pws_via_reflection(stat, stat, 1.0, 1.0).value,
             pws::pws_atom_slab(stat, stat, 1.0, 1.0).value, 1e-8);
  t.rel_near("static L=0.3 e=5", exact::pws_via_reflection(stat, stat, 0.3, 5.0).value,
             pws::pws_atom_slab(stat, stat, 0.3, 5.0).value, 1e-8);
  const double L = 1.0 / u_res;
  t.rel_near("lorentz L=1/u_res e=1", exact::pws_via_reflection(lorentz, lorentz, L, 1.0).value,
             pws::pws_atom_slab(lorentz, lorentz, L, 1.0).value, 1e-8);
  t.rel_near("lorentz L=1/u_res e=0.2",
             exact::pws_via_reflection(lorentz, lorentz, L, 0.2).value,
             pws::pws_atom_slab(lorentz, lorentz, L, 0.2).value, 1e-8);
}

void dilute_limit(Tally& t, unsigned) {
  using exact::Polarization, exact::WaveParams, exact::ThinSlabSource;
  const double n_v = 1.0;
  const double a = 1e-3 / (4.0 * pi * n_v);
  const Material atoms = Material::static_alpha(a, n_v);
  const double eps = 1.0 + 4.0 * pi * n_v * a;
  double worst = 0.0;
  for (double u : {0.01, 0.1, 1.0, 10.0, 100.0})
    for (double s : {1.0, 1.1, 2.0, 5.0, 20.0})
      for (double e : {0.01, 1.0, 100.0})
        for (Polarization p : {Polarization::TE, Polarization::TM}) {
          const WaveParams w{u, u * s};
          const double ex = exact::slab_reflection_exact(eps, w, e, p);
          const double su = exact::slab_reflection_summed(atoms, w, e, p);
          worst = std::max(worst, rel_dev(su, ex));
        }
  t.worst_rel("summed vs exact slab (5x5x3 grid)", worst, 1e-3);

  // d r / d e at e = 0 by second-order one-sided differences.
  const Material dense = Material::static_eps(5.0);
  double worst_ex = 0.0;
  double worst_su = 0.0;
  for (double u : {0.1, 1.0, 10.0})
    for (double s : {1.0, 2.0, 10.0})
      for (Polarization p : {Polarization::TE, Polarization::TM}) {
        const WaveParams w{u, u * s};
        for (const Material* m : {&atoms, &dense}) {
          const double e_m = m->eps_iu(u);
          const double h = 1e-5 / w.kappa_m(e_m);
          auto rex = [&](double e) { return exact::slab_reflection_exact(e_m, w, e, p); };
          const double d_ex = (4.0 * rex(h) - rex(2.0 * h)) / (2.0 * h);
          const double c_ex = exact::thin_slab_first_order(ThinSlabSource::Exact, *m, w, 1.0, p);
          worst_ex = std::max(worst_ex, rel_dev(d_ex, c_ex));
          const double hs = 1e-5 / w.kappa;
          auto rsu = [&](double e) { return exact::slab_reflection_summed(*m, w, e, p); };
          const double d_su = (4.0 * rsu(hs) - rsu(2.0 * hs)) / (2.0 * hs);
          const double c_su =
              exact::thin_slab_first_order(ThinSlabSource::Summed, *m, w, 1.0, p);
          worst_su = std::max(worst_su, rel_dev(d_su, c_su));
        }
      }
  t.worst_rel("thin-slab exact slope", worst_ex, 1e-8);
  t.worst_rel("thin-slab summed slope", worst_su, 1e-8);
}

void special_functions(Tally& t, unsigned) {
  using specfun::PrimitiveKind;
  t.require(specfun::primitive(PrimitiveKind::J, 0.0) == -23.0 / 15.0,
            "j(0)=" + num(specfun::primitive(PrimitiveKind::J, 0.0)) + " (want -23/15 exactly)");
  double worst = 0.0;
  for (PrimitiveKind k : specfun::kAllPrimitives) {
    if (k == PrimitiveKind::J) continue;
    for (double x : {0.3, 1.0, 2.5, 7.0, 20.0, 45.0}) {
      const double defect = specfun::primitive_chain_check(k, x, 1e-4 * std::min(x, 1.0));
      worst = std::max(worst, std::abs(defect / specfun::primitive(k, x)));
    }
  }
  t.worst_rel("derivative chain d..j", worst, 1e-6);
  double largest = 0.0;
  for (PrimitiveKind k : specfun::kAllPrimitives)
    largest = std::max(largest, std::abs(specfun::primitive(k, 100.0)));
  t.require(largest < 1e-40, "max |p(100)|=" + num(largest) + " (want < 1e-40)");
}

void sphere_anchors(Tally& t, unsigned) {
  const double n = 1.0;
  const double a = 0.01;
  const Material m = Material::static_alpha(a, n);
  double worst = 0.0;
  for (auto [center, R] : {std::pair{2.0, 1.0}, {5.0, 0.5}, {1.5, 1.0}, {30.0, 3.0}}) {
    const double d = center * center - R * R;
    const double want = -(23.0 / 30.0) * pi * R * R * R * n * n * a * a / (d * d);
    worst = std::max(worst, rel_dev(pws::pws_sphere_plate(m, m, center, R).value, want));
  }
  t.worst_rel("sphere-plate quadrature vs closed form", worst, 1e-10);

  const double R = 3e-4;
  const double center = 1.0;
  const double volume = 4.0 / 3.0 * pi * R * R * R;
  t.rel_near("small sphere vs volume x atom-plate",
             pws::pws_sphere_plate(m, m, center, R).value,
             volume * n * pws::pws_atom_plate(m, m, center).value, 1e-6);
  t.abs_near("small perfect-mirror sphere ratio", ratios::small_sphere_perfect_mirror_ratio(),
             23.0 / 30.0, 1e-6);
}

struct Check {
  const char* title;
  std::function<void(Tally&, unsigned)> body;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"perfect-mirror atom-plate ratio", perfect_mirror_atom_plate},
      {"atom-plate maximum", atom_plate_maximum},
      {"silicon point", silicon_point},
      {"perfect-mirror plate-plate ratio", perfect_mirror_plate_plate},
      {"perfect-mirror Lifshitz energy", casimir_limit},
      {"plate-plate maximum and crossing", plate_plate_maximum},
      {"thickness factors", thickness_factors},
      {"closed form vs brute-force PWS", oracle_equivalence},
      {"reflection-path PWS", reflection_path},
      {"dilute limit and thin slabs", dilute_limit},
      {"special functions", special_functions},
      {"sphere anchors", sphere_anchors},
  };
  return all;
}

}  // namespace

CheckResult run_check(int id, unsigned jobs) {
  if (id < 1 || id > kCheckCount) throw std::out_of_range("no check " + std::to_string(id));
  const Check& c = checks()[static_cast<std::size_t>(id - 1)];
  CheckResult r;
  r.id = id;
  r.title = c.title;
  Tally t;
  try {
    c.body(t, jobs);
    r.passed = t.ok();
    r.detail = t.detail();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = t.detail() + (t.detail().empty() ? "" : "; ") + "exception: " + e.what();
  }
  return r;
}

std::vector<CheckResult> run_all(unsigned jobs) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, jobs));
  return out;
}

void print(std::ostream& os, const std::vector<CheckResult>& results) {
  int passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << ": " << r.detail
       << '\n';
    passed += r.passed ? 1 : 0;
  }
  os << passed << '/' << results.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace casimir::validation
