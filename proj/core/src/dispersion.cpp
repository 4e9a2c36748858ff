#include "casimir_knob/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

using PC = PhysicalConstants;

void require_exterior(double radius_m, double z, const char* where) {
  if (!(radius_m >= 0.0) || !(z > radius_m) || !std::isfinite(z)) {
    throw DomainError(std::string(where) + ": atom must lie outside the sphere (z_a > R)");
  }
}

double dipole_scale(const OscillatorModel& atom, double z) {
  return std::min(atom.lowest_resonance().value, PC::c / (2.0 * z));
}

QuadratureSpec with_scale(const QuadratureSpec& spec, double scale) {
  QuadratureSpec s = spec;
  s.scale_hint = scale;
  return s;
}

DispersionResult from_quadrature(const QuadratureResult& q, double prefactor) {
  DispersionResult r;
  r.value = prefactor * q.value;
  r.error_estimate = std::abs(prefactor) * q.error_estimate;
  r.converged = q.converged;
  r.evaluations = q.evaluations;
  return r;
}

}  // namespace

Geometry Geometry::make(double radius_m, double gap_m) {
  if (!(radius_m > 0.0) || !std::isfinite(radius_m)) {
    throw DomainError("Geometry: sphere radius must be finite and > 0");
  }
  if (!(gap_m > 0.0) || !std::isfinite(gap_m)) {
    throw DomainError("Geometry: atom-surface gap must be finite and > 0");
  }
  return Geometry{radius_m, gap_m};
}

void MultipoleOptions::validate() const {
  if (l_max < 1) throw DomainError("MultipoleOptions: l_max must be >= 1");
  if (tail_tol && !(*tail_tol > 0.0 && *tail_tol <= 1e-3)) {
    throw DomainError("MultipoleOptions: tail_tol must lie in (0, 1e-3]");
  }
}

std::string_view method_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::dipole_full: return "dipole-full";
    case MethodKind::retarded_pc: return "retarded-pc";
    case MethodKind::nonretarded_pc: return "nonretarded-pc";
    case MethodKind::multipole_nr: return "multipole-nr";
    case MethodKind::auto_select: return "auto";
  }
  return "unknown";
}

MethodKind parse_method(std::string_view name) {
  for (auto k : {MethodKind::dipole_full, MethodKind::retarded_pc, MethodKind::nonretarded_pc,
                 MethodKind::multipole_nr, MethodKind::auto_select}) {
    if (method_name(k) == name) return k;
  }
  throw ValidationError("unknown dispersion method '" + std::string(name) +
                        "' (expected dipole-full, retarded-pc, nonretarded-pc, multipole-nr or auto)");
}

DispersionResult dispersion_energy_dipole(const OscillatorModel& atom,
                                          const DielectricModel& material, const Geometry& geom,
                                          const QuadratureSpec& spec) {
  const double z = geom.center_distance();
  const double R = geom.radius;
  const double k = z / PC::c;
  auto integrand = [&](double xi) {
    const AngularFrequency w{xi};
    const double x = xi * k;
    const double decay = std::exp(-2.0 * x);
    if (decay == 0.0) return 0.0;
    const double bracket = 3.0 + x * (6.0 + x * (5.0 + x * (2.0 + x)));
    return atomic_polarizability(atom, w).value * mie_factor(material, w) * decay * bracket;
  };
  const auto q = integrate_semi_infinite(integrand, with_scale(spec, dipole_scale(atom, z)));
  const double z3 = z * z * z;
  const double prefactor = -PC::hbar * R * R * R / (4.0 * kPi * kPi * PC::eps0 * z3 * z3);
  return from_quadrature(q, prefactor);
}

DispersionResult dispersion_force_dipole(const OscillatorModel& atom,
                                         const DielectricModel& material, const Geometry& geom,
                                         const QuadratureSpec& spec) {
  const double z = geom.center_distance();
  const double R = geom.radius;
  const double k = z / PC::c;
  auto integrand = [&](double xi) {
    const AngularFrequency w{xi};
    const double x = xi * k;
    const double decay = std::exp(-2.0 * x);
    if (decay == 0.0) return 0.0;
    const double q = 18.0 + x * (36.0 + x * (32.0 + x * (16.0 + x * (6.0 + 2.0 * x))));
    return atomic_polarizability(atom, w).value * mie_factor(material, w) * decay * q;
  };
  const auto q = integrate_semi_infinite(integrand, with_scale(spec, dipole_scale(atom, z)));
  const double z3 = z * z * z;
  const double prefactor = -PC::hbar * R * R * R / (4.0 * kPi * kPi * PC::eps0 * z3 * z3 * z);
  return from_quadrature(q, prefactor);
}

double dispersion_energy_retarded_pc(Polarizability alpha_static, double radius_m,
                                     double center_distance_m) {
  require_exterior(radius_m, center_distance_m, "dispersion_energy_retarded_pc");
  const double z = center_distance_m;
  const double alpha_sphere = kFourPiEps0 * radius_m * radius_m * radius_m;
  const double z7 = std::pow(z, 7);
  return -23.0 * PC::hbar * PC::c * alpha_sphere * alpha_static.value /
         (64.0 * kPi * kPi * kPi * PC::eps0 * PC::eps0 * z7);
}

double dispersion_force_retarded_pc(Polarizability alpha_static, double radius_m,
                                    double center_distance_m) {
  return 7.0 * dispersion_energy_retarded_pc(alpha_static, radius_m, center_distance_m) /
         center_distance_m;
}

double dispersion_energy_nonretarded_pc(Polarizability alpha_static, AngularFrequency omega0,
                                        double radius_m, double center_distance_m) {
  require_exterior(radius_m, center_distance_m, "dispersion_energy_nonretarded_pc");
  const double z = center_distance_m;
  const double alpha_sphere = kFourPiEps0 * radius_m * radius_m * radius_m;
  const double z3 = z * z * z;
  return -3.0 * PC::hbar * omega0.value * alpha_sphere * alpha_static.value /
         (32.0 * kPi * kPi * PC::eps0 * PC::eps0 * z3 * z3);
}

double dispersion_energy_nonretarded_pc(const OscillatorModel& atom, double radius_m,
                                        double center_distance_m) {
  if (!atom.single_oscillator()) {
    throw DomainError("dispersion_energy_nonretarded_pc: '" + atom.name() +
                      "' is a two-oscillator model; the closed form holds for a single "
                      "resonance only. Use dipole-full, or sum the closed form term by term.");
  }
  const auto& t = atom.terms().front();
  return dispersion_energy_nonretarded_pc(t.alpha_static, t.omega, radius_m, center_distance_m);
}

double dispersion_force_nonretarded_pc(const OscillatorModel& atom, double radius_m,
                                       double center_distance_m) {
  return 6.0 * dispersion_energy_nonretarded_pc(atom, radius_m, center_distance_m) /
         center_distance_m;
}

MultipoleResult dispersion_multipole_nr(const OscillatorModel& atom,
                                        const DielectricModel& material, const Geometry& geom,
                                        const MultipoleOptions& options,
                                        const QuadratureSpec& spec) {
  options.validate();
  const double z = geom.center_distance();
  const double ratio = geom.radius / z;
  const double z3 = z * z * z;
  const double base = -PC::hbar / (8.0 * kPi * kPi * PC::eps0);
  const QuadratureSpec qspec = with_scale(spec, atom.lowest_resonance().value);

  MultipoleResult out;
  auto& energy = out.energy;
  auto& force = out.force;
  bool quad_ok = true;
  bool series_done = !options.tail_tol.has_value();
  double tail = 1.0;

  for (int l = 1; l <= options.l_max; ++l) {
    const double geometric = std::pow(ratio, 2 * l + 1);
    double term_e = 0.0;
    double err_e = 0.0;
    if (geometric > 0.0) {
      auto integrand = [&](double xi) {
        const AngularFrequency w{xi};
        return atomic_polarizability(atom, w).value * multipole_factor(material, w, l);
      };
      const auto q = integrate_semi_infinite(integrand, qspec);
      quad_ok = quad_ok && q.converged;
      energy.evaluations += q.evaluations;
      const double coeff = base * (2.0 * l + 1.0) * (l + 1.0) * geometric / z3;
      term_e = coeff * q.value;
      err_e = std::abs(coeff) * q.error_estimate;
    }
    const double dz = (2.0 * l + 4.0) / z;
    const double term_f = term_e * dz;

    energy.value += term_e;
    energy.error_estimate += err_e;
    force.value += term_f;
    force.error_estimate += err_e * dz;
    energy.terms = force.terms = l;

    const double tail_e = energy.value != 0.0 ? std::abs(term_e / energy.value) : 0.0;
    const double tail_f = force.value != 0.0 ? std::abs(term_f / force.value) : 0.0;
    tail = std::max(tail_e, tail_f);
    if (options.tail_tol && tail < *options.tail_tol) {
      series_done = true;
      break;
    }
  }

  energy.tail_ratio = force.tail_ratio = tail;
  energy.converged = force.converged = quad_ok && series_done;
  force.evaluations = energy.evaluations;
  return out;
}

DispersionResult dispersion_energy_multipole_nr(const OscillatorModel& atom,
                                                const DielectricModel& material,
                                                const Geometry& geom,
                                                const MultipoleOptions& options,
                                                const QuadratureSpec& spec) {
  return dispersion_multipole_nr(atom, material, geom, options, spec).energy;
}

double lowest_transition_wavelength(const OscillatorModel& atom) {
  return 2.0 * kPi * PC::c / atom.lowest_resonance().value;
}

MethodKind resolve_method(MethodKind requested, const OscillatorModel& atom,
                          const Geometry& geom) {
  if (requested != MethodKind::auto_select) return requested;
  const bool short_range = geom.gap <= geom.radius;
  const bool nonretarded = geom.center_distance() <= 0.1 * lowest_transition_wavelength(atom);
  return short_range && nonretarded ? MethodKind::multipole_nr : MethodKind::dipole_full;
}

DispersionForce dispersion_force(const OscillatorModel& atom, const DielectricModel& material,
                                 const Geometry& geom, const DispersionMethod& method,
                                 const QuadratureSpec& spec) {
  const MethodKind kind = resolve_method(method.kind, atom, geom);
  DispersionForce out{{}, kind};
  const double z = geom.center_distance();
  switch (kind) {
    case MethodKind::dipole_full:
      out.force = dispersion_force_dipole(atom, material, geom, spec);
      break;
    case MethodKind::retarded_pc:
      out.force.value = dispersion_force_retarded_pc(atom.static_polarizability(), geom.radius, z);
      break;
    case MethodKind::nonretarded_pc:
      out.force.value = dispersion_force_nonretarded_pc(atom, geom.radius, z);
      break;
    case MethodKind::multipole_nr:
      out.force = dispersion_multipole_nr(atom, material, geom, method.multipole, spec).force;
      break;
    case MethodKind::auto_select:
      break;  // resolved above
  }
  return out;
}

}  // namespace casimir_knob
