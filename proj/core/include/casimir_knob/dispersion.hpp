#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir_knob/quadrature.hpp"
#include "casimir_knob/response.hpp"

namespace casimir_knob {

/// Sphere of radius `radius` centred at the origin, atom on the +z axis a
/// distance `gap` from the sphere surface.
struct Geometry {
  double radius = 0.0;  // m
  double gap = 0.0;     // m

  /// Throws DomainError unless both lengths are finite and > 0.
  static Geometry make(double radius_m, double gap_m);

  /// Atom position z_a = R + a.
  double center_distance() const noexcept { return radius + gap; }
};

enum class MethodKind {
  dipole_full,     // full imaginary-frequency integral, dipole sphere
  retarded_pc,     // z^-7 closed form, perfect conductor, static atom
  nonretarded_pc,  // z^-6 closed form, perfect conductor, single oscillator
  multipole_nr,    // non-retarded multipole series
  auto_select,
};

/// Series controls for multipole_nr. With a tail tolerance the series stops
/// once |term_l| < tail_tol |partial sum|; without one exactly l_max terms
/// are summed.
struct MultipoleOptions {
  int l_max = 2000;
  std::optional<double> tail_tol = 1e-6;

  /// Throws DomainError unless l_max >= 1 and tail_tol in (0, 1e-3].
  void validate() const;
};

struct DispersionMethod {
  MethodKind kind = MethodKind::dipole_full;
  MultipoleOptions multipole{};

  static DispersionMethod dipole_full() { return {MethodKind::dipole_full, {}}; }
  static DispersionMethod retarded_pc() { return {MethodKind::retarded_pc, {}}; }
  static DispersionMethod nonretarded_pc() { return {MethodKind::nonretarded_pc, {}}; }
  static DispersionMethod multipole_nr(MultipoleOptions opts = {}) {
    return {MethodKind::multipole_nr, opts};
  }
  static DispersionMethod automatic(MultipoleOptions opts = {}) {
    return {MethodKind::auto_select, opts};
  }
};

/// CLI spelling: dipole-full, retarded-pc, nonretarded-pc, multipole-nr, auto.
std::string_view method_name(MethodKind kind);
/// Throws ValidationError for an unknown spelling.
MethodKind parse_method(std::string_view name);

/// Energy (J) or z-force (N) with numerical diagnostics. Closed forms report
/// converged = true and zero error.
struct DispersionResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  std::size_t evaluations = 0;
  int terms = 0;            // multipole orders summed
  double tail_ratio = 0.0;  // |last term / partial sum| of the multipole series
};

// The dipole-approximation integrals choose the quadrature scale themselves,
// min(lowest atomic resonance, c / (2 z_a)); spec.scale_hint is ignored.

/// U = -hbar R^3 / (4 pi^2 eps0 z^6) * integral of
///     alpha(i xi) mie(i xi) exp(-2x) (3 + 6x + 5x^2 + 2x^3 + x^4),  x = xi z / c.
DispersionResult dispersion_energy_dipole(const OscillatorModel& atom,
                                          const DielectricModel& material, const Geometry& geom,
                                          const QuadratureSpec& spec = {});

/// F = -dU/dz_a, differentiated under the integral sign:
///     F = -hbar R^3 / (4 pi^2 eps0 z^7) * integral of alpha mie exp(-2x) Q(x),
///     Q(x) = 18 + 36x + 32x^2 + 16x^3 + 6x^4 + 2x^5.
DispersionResult dispersion_force_dipole(const OscillatorModel& atom,
                                         const DielectricModel& material, const Geometry& geom,
                                         const QuadratureSpec& spec = {});

/// Retarded, perfectly conducting sphere with static atomic polarizability:
/// -23 hbar c alpha_s alpha(0) / (64 pi^3 eps0^2 z^7), alpha_s = 4 pi eps0 R^3.
double dispersion_energy_retarded_pc(Polarizability alpha_static, double radius_m,
                                     double center_distance_m);
double dispersion_force_retarded_pc(Polarizability alpha_static, double radius_m,
                                    double center_distance_m);

/// Non-retarded, perfectly conducting sphere, single oscillator:
/// -3 hbar omega0 alpha_s alpha(0) / (32 pi^2 eps0^2 z^6). Two-oscillator
/// atoms are rejected with DomainError.
double dispersion_energy_nonretarded_pc(const OscillatorModel& atom, double radius_m,
                                        double center_distance_m);
double dispersion_energy_nonretarded_pc(Polarizability alpha_static, AngularFrequency omega0,
                                        double radius_m, double center_distance_m);
double dispersion_force_nonretarded_pc(const OscillatorModel& atom, double radius_m,
                                       double center_distance_m);

struct MultipoleResult {
  DispersionResult energy;
  DispersionResult force;
};

/// Non-retarded multipole series
///   U = -hbar / (8 pi^2 eps0) sum_l (2l+1)(l+1) R^(2l+1) / z^(2l+4)
///       * integral of alpha(i xi) (eps - 1) / (eps + (l+1)/l),
/// with the force summed term by term from dU_l/dz = -(2l+4) U_l / z.
/// Each integral uses the lowest atomic resonance as its scale.
MultipoleResult dispersion_multipole_nr(const OscillatorModel& atom,
                                        const DielectricModel& material, const Geometry& geom,
                                        const MultipoleOptions& options,
                                        const QuadratureSpec& spec = {});

DispersionResult dispersion_energy_multipole_nr(const OscillatorModel& atom,
                                                const DielectricModel& material,
                                                const Geometry& geom,
                                                const MultipoleOptions& options,
                                                const QuadratureSpec& spec = {});

/// Wavelength 2 pi c / omega of the atom's lowest resonance.
double lowest_transition_wavelength(const OscillatorModel& atom);

/// Auto rule: multipole_nr when a <= R and z_a <= 0.1 lambda_min, otherwise
/// dipole_full. Non-auto kinds are returned unchanged.
MethodKind resolve_method(MethodKind requested, const OscillatorModel& atom,
                          const Geometry& geom);

struct DispersionForce {
  DispersionResult force;
  MethodKind method;  // resolved, never auto_select
};

/// Dispersive z-force by the requested method.
DispersionForce dispersion_force(const OscillatorModel& atom, const DielectricModel& material,
                                 const Geometry& geom, const DispersionMethod& method,
                                 const QuadratureSpec& spec = {});

// --- validity -------------------------------------------------------------

struct RegimeCheck {
  bool ok = true;
  bool applicable = true;
  double ratio = 0.0;
  double threshold = 0.0;
};

struct RegimeThresholds {
  double dipole_ratio = 0.2;         // R / a above this: dipole sphere is doubtful
  double multipole_ratio = 1.0;      // R / a above this: use the multipole series
  double nonretarded_fraction = 0.1; // z_a / lambda_min above this: retardation matters
  double retarded_factor = 10.0;     // z_a omega_min / c below this: not fully retarded
  double penetration_factor = 10.0;  // a / l_p below this: perfect conductor doubtful
  double stark_fraction = 1e-2;      // E0 / 1e10 V/m above this: Stark shift matters
  double backaction_max = 1e-3;      // (a0 / a)^3 above this: atom's field on sphere matters
};

/// Advisory regime flags. Each check carries the ratio that produced it.
struct ValidityReport {
  RegimeCheck dipole;             // ratio R / a
  RegimeCheck multipole;          // ratio R / a; not ok means a <= R-ish, prefer multipole_nr
  RegimeCheck nonretarded;        // ratio z_a / lambda_min
  RegimeCheck retarded;           // ratio z_a omega_min / c
  RegimeCheck perfect_conductor;  // ratio a / l_p with l_p = c / omega_p; Drude metals only
  RegimeCheck stark;              // ratio E0 / 1e10 V/m
  RegimeCheck backaction;         // ratio (a0 / a)^3
  double penetration_length = 0.0;  // m, 0 when not a Drude metal
};

inline constexpr double kStarkFieldScale = 1e10;  // V/m

ValidityReport regime_report(const OscillatorModel& atom, const DielectricModel& material,
                             const Geometry& geom, double field_v_per_m,
                             const RegimeThresholds& thresholds = {});

/// Short warning codes for the checks relevant to `method`.
std::vector<std::string> warning_codes(const ValidityReport& report, MethodKind method);

}  // namespace casimir_knob
