#pragma once

#include <string>
#include <vector>

#include "casimir_knob/dispersion.hpp"
#include "casimir_knob/electrostatics.hpp"

namespace casimir_knob {

enum class ElectrostaticModel {
  full,          // closed form with the (R/z)^3 corrections
  small_sphere,  // leading order only
};

struct ForceOptions {
  DispersionMethod method{};
  QuadratureSpec quadrature{};
  ElectrostaticModel electrostatics = ElectrostaticModel::full;
  RegimeThresholds thresholds{};
};

// Net z-force decomposition. Negative forces point toward the sphere.
struct ForceBreakdown {
  double f_disp = 0.0;  // N
  double f_el = 0.0;    // N
  double f_net = 0.0;   // N, f_el + f_disp
  double gamma = 0.0;   // f_net / |f_disp|; > 0 means net repulsion
  MethodKind method = MethodKind::dipole_full;  // as resolved
  ValidityReport validity{};
  bool converged = true;
  double disp_error_estimate = 0.0;
  int multipole_terms = 0;
  double tail_ratio = 0.0;
  std::vector<std::string> warnings;
};

ForceBreakdown force_breakdown(const OscillatorModel& atom, const DielectricModel& material,
                               const Geometry& geom, const FieldConfig& field,
                               const ForceOptions& options);

ForceBreakdown force_breakdown(const OscillatorModel& atom, const DielectricModel& material,
                               const Geometry& geom, const FieldConfig& field,
                               const DispersionMethod& method, const QuadratureSpec& spec = {});

// Gamma for a retarded perfect conductor with the small-sphere force at
// theta0 = pi/2; independent of atom and material:
//   48 pi^2 eps0 E0^2 z^4 / (161 hbar c) - 1
double gamma_retarded_closed(double field_v_per_m, double center_distance_m);

// Field at which gamma_retarded_closed crosses zero.
double critical_field_retarded(double center_distance_m);

// Non-retarded perfect-conductor counterpart:
//   4 pi eps0 E0^2 z^3 / (3 hbar omega0) - 1
double gamma_nonretarded_closed(double field_v_per_m, double center_distance_m,
                                AngularFrequency omega0);

// sqrt(3 hbar omega0 / (4 pi eps0 z^3)), the zero of gamma_nonretarded_closed.
double critical_field_nonretarded(AngularFrequency omega0, double center_distance_m);

// Field magnitude at which the full electrostatic force balances the
// dispersive one (gamma = 0). Uses F_el proportional to E0^2, so no
// iteration. Throws NoCrossoverError when F_el at 1 V/m is not repulsive.
double critical_field(const OscillatorModel& atom, const DielectricModel& material,
                      const Geometry& geom, double theta_rad, const DispersionMethod& method,
                      const QuadratureSpec& spec = {});

struct RootBracket {
  double lo = 0.0;  // m
  double hi = 0.0;  // m
  double tol_rel = 1e-6;
};

// Gap a (m) at which gamma changes sign, by bisection on [lo, hi]. Throws
// BracketError, carrying gamma at both ends, when there is no sign change.
double crossing_distance(const OscillatorModel& atom, const DielectricModel& material,
                         double radius_m, const FieldConfig& field, const DispersionMethod& method,
                         const RootBracket& bracket, const QuadratureSpec& spec = {});

}  // namespace casimir_knob
