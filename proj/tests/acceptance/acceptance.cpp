// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed
// here and never read from the command line. `--only N` runs one criterion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "casimir_knob/analysis.hpp"
#include "casimir_knob/catalog.hpp"
#include "casimir_knob/presets.hpp"
#include "casimir_knob/sweep.hpp"
#include "oracle_values.hpp"
#include "reference_quadrature.hpp"
#include "test_util.hpp"

using namespace casimir_knob;
using std::numbers::pi;
using test_util::rel_err;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

QuadratureSpec tight(double tol = 1e-12) {
  QuadratureSpec s;
  s.rel_tol = tol;
  s.max_refinements = 60;
  return s;
}

constexpr double nm = 1e-9;
constexpr double kR = 60 * nm;

// --- 1 ---------------------------------------------------------------------
Outcome retarded_identity() {
  constexpr double kTol = 1e-6;
  const Polarizability a0 = au_to_si_polarizability(4.5);
  // resonance far above every xi that matters: alpha(i xi) == alpha(0)
  const OscillatorModel frozen("frozen", {{a0, AngularFrequency{1e30}}});
  const auto& pc = find_material("PerfectConductor");
  double worst = 0.0;
  for (double z : log_grid(0.1e-6, 10e-6, 25)) {
    const double r = z / 10;
    const double u = dispersion_energy_dipole(frozen, pc, Geometry::make(r, z - r)).value;
    worst = std::max(worst, rel_err(u, dispersion_energy_retarded_pc(a0, r, z)));
  }
  return {worst <= kTol, fmt("max rel err %.3g over z_a in [0.1, 10] um (tol %.0e)", worst, kTol)};
}

// --- 2 ---------------------------------------------------------------------
Outcome nonretarded_identity() {
  constexpr double kTol = 1e-3;
  const auto& h = find_atom("H");
  const auto& pc = find_material("PerfectConductor");
  const double lambda0 = lowest_transition_wavelength(h);
  auto deviation = [&](double n) {
    const double z = lambda0 / n, r = z / 10;
    const double u = dispersion_energy_dipole(h, pc, Geometry::make(r, z - r), tight()).value;
    return rel_err(u, dispersion_energy_nonretarded_pc(h, r, z));
  };
  const double d3 = deviation(1e3), d4 = deviation(1e4), d5 = deviation(1e5);
  const bool improving = d4 < d3 && d5 < d4;
  return {d3 <= kTol && improving,
          fmt("rel dev %.4g at lambda0/1e3 (tol %.0e), %.4g at /1e4, %.4g at /1e5; improving=%s",
              d3, kTol, d4, d5, improving ? "yes" : "no")};
}

// --- 3 ---------------------------------------------------------------------
Outcome multipole_consistency() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (const char* atom : {"H", "Cs"}) {
    for (const char* mat : {"Au", "SiO2", "PerfectConductor"}) {
      const auto& a = find_atom(atom);
      const auto& m = find_material(mat);
      for (double z : {70 * nm, 200 * nm}) {
        const auto g = Geometry::make(kR, z - kR);
        const double l1 =
            dispersion_multipole_nr(a, m, g, {1, std::nullopt}, tight()).energy.value;
        // dipole integrand with exp(-2x) P(x) -> P(0) = 3
        const double integral = reference::integrate(
            [&](double xi) {
              const AngularFrequency w{xi};
              return atomic_polarizability(a, w).value * mie_factor(m, w);
            },
            a.lowest_resonance().value);
        const double limit = -PhysicalConstants::hbar * kR * kR * kR /
                             (4 * pi * pi * PhysicalConstants::eps0 * std::pow(z, 6)) * 3 *
                             integral;
        worst = std::max(worst, rel_err(l1, limit));
      }
    }
  }
  return {worst <= kTol, fmt("max rel err %.3g, l = 1 term vs static limit (tol %.0e)", worst, kTol)};
}

// --- 4 ---------------------------------------------------------------------
Outcome electrostatic_cases() {
  constexpr double kTol = 1e-12;
  double worst_cases = 0.0;
  for (const auto& entry : material_catalog()) {
    for (double z : {70 * nm, 300 * nm, 900 * nm}) {
      for (double e : {1e3, 7e4, 9e6}) {
        const Polarizability aa = find_atom("Cs").static_polarizability();
        const double as = sphere_polarizability(entry.model, kR, AngularFrequency{0}).value;
        const double s = as / (kFourPiEps0 * z * z * z);
        const double pre = 3 * aa.value * as * e * e / (kFourPiEps0 * std::pow(z, 4));
        const double f0 = electrostatic_force_z(aa, entry.model, kR, z, FieldConfig::make(e, 0));
        const double f90 =
            electrostatic_force_z(aa, entry.model, kR, z, FieldConfig::make(e, pi / 2));
        worst_cases = std::max({worst_cases, rel_err(f0, -2 * pre * (1 + 2 * s)),
                                rel_err(f90, pre * (1 - s))});
      }
    }
  }

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> th(0.0, 2 * pi), le(1.0, 7.0), lr(-8.5, -6.5),
      gap(1.02, 30.0), la(-41.0, -38.0);
  std::uniform_int_distribution<std::size_t> mat(0, material_catalog().size() - 1);
  double worst_comp = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double r = std::pow(10.0, lr(rng)), z = r * gap(rng);
    const auto field = FieldConfig::make(std::pow(10.0, le(rng)), th(rng));
    const Polarizability aa{std::pow(10.0, la(rng))};
    const auto& m = material_catalog()[mat(rng)].model;
    const Vector3 p_s = sphere_polarizability(m, r, AngularFrequency{0}).value * field.vector();
    const Vector3 p_a = induced_atomic_dipole(aa, m, r, z, field);
    const double composed = 3 / (kFourPiEps0 * std::pow(z, 4)) * (p_a.dot(p_s) - 3 * p_a.z * p_s.z);
    worst_comp = std::max(worst_comp, rel_err(electrostatic_force_z(aa, m, r, z, field), composed));
  }
  return {worst_cases <= kTol && worst_comp <= kTol,
          fmt("theta0 = 0, pi/2 max rel err %.3g; composition max rel err %.3g over 1000 draws "
              "(tol %.0e)",
              worst_cases, worst_comp, kTol)};
}

// --- 5 ---------------------------------------------------------------------
Outcome force_energy() {
  constexpr double kTol = 1e-6;
  const auto& h = find_atom("H");
  const auto& au = find_material("Au");
  double worst = 0.0;
  for (double z : log_grid(100 * nm, 10e-6, 20)) {
    auto u = [&](double zz) {
      return dispersion_energy_dipole(h, au, Geometry::make(kR, zz - kR), tight(1e-13)).value;
    };
    const double step = 1e-3 * z;
    const double d1 = (u(z + step) - u(z - step)) / (2 * step);
    const double d2 = (u(z + 2 * step) - u(z - 2 * step)) / (4 * step);
    const double fd = -(4 * d1 - d2) / 3;
    const double f =
        dispersion_force_dipole(h, au, Geometry::make(kR, z - kR), tight(1e-13)).value;
    worst = std::max(worst, rel_err(f, fd));
  }
  return {worst <= kTol, fmt("max rel err %.3g vs Richardson difference, 20 points (tol %.0e)",
                             worst, kTol)};
}

// --- 6 ---------------------------------------------------------------------
Outcome gamma_structure() {
  const auto& h = find_atom("H");
  const auto& au = find_material("Au");
  const auto geom = Geometry::make(kR, 700 * nm);
  auto gamma = [&](double e, double th) {
    return force_breakdown(h, au, geom, FieldConfig::make(e, th), DispersionMethod::dipole_full())
        .gamma;
  };
  bool exact = true;
  for (double th : {0.0, 0.7, pi / 2, 2.0, pi}) exact = exact && gamma(0.0, th) == -1.0;

  double worst_quad = 0.0;
  for (double th : {0.0, 0.4, pi / 2, 2.5}) {
    const double k = (gamma(1e4, th) + 1) / 1e8;
    for (double e : {3e4, 1e5, 4e5}) worst_quad = std::max(worst_quad, rel_err((gamma(e, th) + 1) / (e * e), k));
  }

  const double theta_zero = zero_force_angle(au, kR, geom.center_distance());
  double worst_meet = 0.0;
  for (double e : {2e4, 6e4, 1e5}) {
    for (double th : {theta_zero, pi - theta_zero, pi + theta_zero, 2 * pi - theta_zero}) {
      worst_meet = std::max(worst_meet, std::abs(gamma(e, th) + 1));
    }
  }
  const bool ok = exact && worst_quad <= 1e-10 && worst_meet <= 1e-9;
  return {ok, fmt("gamma(E0=0) == -1: %s; E0^2 law max rel err %.3g (tol 1e-10); "
                  "|gamma+1| at zero-force angle %.3g (tol 1e-9)",
                  exact ? "yes" : "no", worst_quad, worst_meet)};
}

// --- 7 ---------------------------------------------------------------------
Outcome r_invariance() {
  constexpr double kTol = 1e-12;
  ForceOptions opts;
  opts.electrostatics = ElectrostaticModel::small_sphere;
  double worst = 0.0;
  for (const char* atom : {"H", "Na", "Cs"}) {
    for (const char* mat : {"Au", "SiO2", "PerfectConductor"}) {
      for (double z : {300 * nm, 760 * nm, 1500 * nm}) {
        for (double th : {0.0, 1.1, pi / 2}) {
          const auto field = FieldConfig::make(7e4, th);
          auto g = [&](double r) {
            return force_breakdown(find_atom(atom), find_material(mat), Geometry::make(r, z - r),
                                   field, opts)
                .gamma;
          };
          const double g60 = g(60 * nm);
          worst = std::max({worst, rel_err(g(20 * nm), g60), rel_err(g(40 * nm), g60)});
        }
      }
    }
  }
  return {worst <= kTol, fmt("max rel spread over R in {20, 40, 60} nm: %.3g (tol %.0e)", worst, kTol)};
}

// --- 8 ---------------------------------------------------------------------
Outcome critical_field_window() {
  const auto& h = find_atom("H");
  const auto& au = find_material("Au");
  double lo = INFINITY, hi = 0.0, prev = INFINITY;
  bool decreasing = true;
  for (double a = 500; a <= 800; a += 25) {
    const double ec = critical_field(h, au, Geometry::make(kR, a * nm), pi / 2,
                                     DispersionMethod::dipole_full());
    decreasing = decreasing && ec < prev;
    prev = ec;
    lo = std::min(lo, ec);
    hi = std::max(hi, ec);
  }
  const bool ok = decreasing && lo >= 0.3e5 && hi <= 1.5e5;
  return {ok, fmt("E_c over a in [500, 800] nm spans [%.4g, %.4g] V/m (window [3e4, 1.5e5]); "
                  "decreasing=%s",
                  lo, hi, decreasing ? "yes" : "no")};
}

// --- 9 ---------------------------------------------------------------------
Outcome crossing_window() {
  const auto& au = find_material("Au");
  const auto field = FieldConfig::make(1e5, pi / 2);
  std::map<std::string, double> cross;
  for (const char* atom : {"Na", "K", "Fe", "Rb", "Cs"}) {
    cross[atom] = crossing_distance(find_atom(atom), au, kR, field, DispersionMethod::dipole_full(),
                                    RootBracket{300 * nm, 1000 * nm, 1e-9}) /
                  nm;
  }
  bool inside = true;
  double lo = INFINITY, hi = 0.0;
  for (const auto& [name, a] : cross) {
    inside = inside && a >= 480 && a <= 560;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  const bool order = cross["Cs"] == lo && cross["Na"] == hi;
  std::string list;
  for (const char* atom : {"Na", "K", "Fe", "Rb", "Cs"}) list += fmt(" %s=%.2f", atom, cross[atom]);
  return {inside && order, fmt("crossings (nm):%s; window [480, 560]; Cs smallest, Na largest: %s",
                               list.c_str(), order ? "yes" : "no")};
}

// --- 10 --------------------------------------------------------------------
Outcome material_ordering() {
  int points = 0, violations = 0;
  double min_margin = INFINITY;
  for (const auto& panel : figure_preset(8).panels) {
    const auto rows = run_sweep(panel.config).rows;
    std::map<double, std::map<std::string, double>> by_gap;
    for (const auto& r : rows) by_gap[r.gap][r.material] = r.gamma;
    for (const auto& [gap, g] : by_gap) {
      ++points;
      const double margin = g.at("SiO2") - g.at("Au");
      min_margin = std::min(min_margin, margin);
      if (!(margin > 0.0)) ++violations;
    }
  }
  return {violations == 0 && points > 0,
          fmt("%d sampled gaps across both panels, %d with gamma_SiO2 <= gamma_Au; min margin %.4g",
              points, violations, min_margin)};
}

// --- 11 --------------------------------------------------------------------
Outcome retarded_anchor() {
  const double z = 800 * nm;
  const double root = critical_field_retarded(z);
  const double full = critical_field(find_atom("H"), find_material("Au"), Geometry::make(kR, z - kR),
                                     pi / 2, DispersionMethod::dipole_full());
  const double d_oracle = rel_err(root, oracle::kRetardedRoot800);
  const double d_quoted = std::abs(root / 5.4e4 - 1);
  const double d_full = std::abs(root / full - 1);
  const bool ok = d_oracle <= 0.03 && d_quoted <= 0.03 && d_full <= 0.25;
  return {ok, fmt("closed-form root %.6g V/m (vs reference %.3g, vs 5.4e4 %.3g; tol 3%%); "
                  "full dipole E_c %.6g V/m, closed form above it by %.3g (tol 25%%)",
                  root, d_oracle, d_quoted, full, d_full)};
}

// --- 12 --------------------------------------------------------------------
Outcome documented_discrepancy() {
  const double z = 800 * nm;
  const double nr = critical_field_nonretarded(find_atom("H").lowest_resonance(), z);
  const double d = rel_err(nr, oracle::kNonRetardedCriticalH800);
  return {d <= 1e-12,
          fmt("non-retarded estimate for H at z_a = 800 nm evaluates to %.6g V/m (reference "
              "match %.2g); the quoted ~6e4 V/m differs by x%.2f and is not asserted",
              nr, d, nr / 6e4)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "retarded identity", retarded_identity},
      {2, "non-retarded identity", nonretarded_identity},
      {3, "multipole l=1 consistency", multipole_consistency},
      {4, "electrostatic special cases and composition", electrostatic_cases},
      {5, "force-energy consistency", force_energy},
      {6, "gamma structure", gamma_structure},
      {7, "R-invariance (small sphere)", r_invariance},
      {8, "critical-field window, H + Au", critical_field_window},
      {9, "crossing window, alkali atoms + Au", crossing_window},
      {10, "dielectric above metal", material_ordering},
      {11, "retarded crossing anchor", retarded_anchor},
      {12, "non-retarded estimate discrepancy", documented_discrepancy},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s AC-%d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  std::printf("%d/%d passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
