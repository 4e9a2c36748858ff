#include "casimir_knob/analysis.hpp"

#include <cmath>
#include <sstream>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {

using PC = PhysicalConstants;

ForceBreakdown force_breakdown(const OscillatorModel& atom, const DielectricModel& material,
                               const Geometry& geom, const FieldConfig& field,
                               const ForceOptions& options) {
  ForceBreakdown out;
  const auto disp = dispersion_force(atom, material, geom, options.method, options.quadrature);
  const double z = geom.center_distance();
  const Polarizability alpha_atom = atom.static_polarizability();

  out.method = disp.method;
  out.f_disp = disp.force.value;
  out.disp_error_estimate = disp.force.error_estimate;
  out.converged = disp.force.converged;
  out.multipole_terms = disp.force.terms;
  out.tail_ratio = disp.force.tail_ratio;

  if (options.electrostatics == ElectrostaticModel::full) {
    out.f_el = electrostatic_force_z(alpha_atom, material, geom.radius, z, field);
  } else {
    const auto alpha_sphere = sphere_polarizability(material, geom.radius, AngularFrequency{0.0});
    out.f_el = electrostatic_force_z_small_sphere(alpha_atom, alpha_sphere, z, field);
  }
  out.f_net = out.f_el + out.f_disp;
  out.gamma = out.f_net / std::abs(out.f_disp);

  out.validity = regime_report(atom, material, geom, field.magnitude, options.thresholds);
  out.warnings = warning_codes(out.validity, out.method);
  if (!disp.force.converged) {
    out.warnings.emplace_back(out.method == MethodKind::multipole_nr ? "series-nonconverged"
                                                                     : "quadrature-nonconverged");
  }
  return out;
}

ForceBreakdown force_breakdown(const OscillatorModel& atom, const DielectricModel& material,
                               const Geometry& geom, const FieldConfig& field,
                               const DispersionMethod& method, const QuadratureSpec& spec) {
  ForceOptions options;
  options.method = method;
  options.quadrature = spec;
  return force_breakdown(atom, material, geom, field, options);
}

double gamma_retarded_closed(double field_v_per_m, double center_distance_m) {
  const double z2 = center_distance_m * center_distance_m;
  return 48.0 * kPi * kPi * PC::eps0 * field_v_per_m * field_v_per_m * z2 * z2 /
             (161.0 * PC::hbar * PC::c) -
         1.0;
}

double critical_field_retarded(double center_distance_m) {
  const double z2 = center_distance_m * center_distance_m;
  return std::sqrt(161.0 * PC::hbar * PC::c / (48.0 * kPi * kPi * PC::eps0 * z2 * z2));
}

double gamma_nonretarded_closed(double field_v_per_m, double center_distance_m,
                                AngularFrequency omega0) {
  if (!(omega0.value > 0.0)) throw DomainError("gamma_nonretarded_closed: omega0 must be > 0");
  const double z = center_distance_m;
  return kFourPiEps0 * field_v_per_m * field_v_per_m * z * z * z /
             (3.0 * PC::hbar * omega0.value) -
         1.0;
}

double critical_field_nonretarded(AngularFrequency omega0, double center_distance_m) {
  if (!(omega0.value > 0.0) || !(center_distance_m > 0.0)) {
    throw DomainError("critical_field_nonretarded: omega0 and z_a must be > 0");
  }
  const double z = center_distance_m;
  return std::sqrt(3.0 * PC::hbar * omega0.value / (kFourPiEps0 * z * z * z));
}

double critical_field(const OscillatorModel& atom, const DielectricModel& material,
                      const Geometry& geom, double theta_rad, const DispersionMethod& method,
                      const QuadratureSpec& spec) {
  const double z = geom.center_distance();
  const auto unit = FieldConfig::make(1.0, theta_rad);
  const double f_el_unit =
      electrostatic_force_z(atom.static_polarizability(), material, geom.radius, z, unit);
  if (!(f_el_unit > 0.0)) {
    std::ostringstream msg;
    msg << "no crossover exists: electrostatic force at theta0 = " << theta_rad
        << " rad is attractive or zero (F_el at 1 V/m = " << f_el_unit << " N)";
    throw NoCrossoverError(msg.str(), f_el_unit);
  }
  const auto disp = dispersion_force(atom, material, geom, method, spec);
  return std::sqrt(std::abs(disp.force.value) / f_el_unit);
}

double crossing_distance(const OscillatorModel& atom, const DielectricModel& material,
                         double radius_m, const FieldConfig& field, const DispersionMethod& method,
                         const RootBracket& bracket, const QuadratureSpec& spec) {
  if (!(bracket.lo > 0.0) || !(bracket.lo < bracket.hi)) {
    throw DomainError("crossing_distance: bracket needs 0 < lo < hi");
  }
  if (!(bracket.tol_rel > 0.0)) throw DomainError("crossing_distance: tol_rel must be > 0");

  auto gamma_at = [&](double gap) {
    return force_breakdown(atom, material, Geometry::make(radius_m, gap), field, method, spec).gamma;
  };

  double lo = bracket.lo;
  double hi = bracket.hi;
  double g_lo = gamma_at(lo);
  double g_hi = gamma_at(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if (std::signbit(g_lo) == std::signbit(g_hi)) {
    std::ostringstream msg;
    msg << "crossing_distance: gamma does not change sign on [" << lo << ", " << hi
        << "] m (gamma = " << g_lo << " and " << g_hi << ")";
    throw BracketError(msg.str(), g_lo, g_hi);
  }

  for (int iter = 0; iter < 200 && (hi - lo) > bracket.tol_rel * 0.5 * (lo + hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = gamma_at(mid);
    if (g_mid == 0.0) return mid;
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace casimir_knob
