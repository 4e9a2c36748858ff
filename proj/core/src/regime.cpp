#include <cmath>
#include <limits>

#include "casimir_knob/dispersion.hpp"

namespace casimir_knob {
namespace {

RegimeCheck at_most(double ratio, double threshold) {
  return {ratio <= threshold, true, ratio, threshold};
}

RegimeCheck at_least(double ratio, double threshold) {
  return {ratio >= threshold, true, ratio, threshold};
}

}  // namespace

ValidityReport regime_report(const OscillatorModel& atom, const DielectricModel& material,
                             const Geometry& geom, double field_v_per_m,
                             const RegimeThresholds& th) {
  using PC = PhysicalConstants;
  ValidityReport r;
  const double z = geom.center_distance();
  const double omega_min = atom.lowest_resonance().value;

  r.dipole = at_most(geom.radius / geom.gap, th.dipole_ratio);
  r.multipole = at_most(geom.radius / geom.gap, th.multipole_ratio);
  r.nonretarded = at_most(z / lowest_transition_wavelength(atom), th.nonretarded_fraction);
  r.retarded = at_least(z * omega_min / PC::c, th.retarded_factor);

  if (const auto* drude = std::get_if<Drude>(&material.model())) {
    r.penetration_length = PC::c / drude->plasma.value;
    r.perfect_conductor = at_least(geom.gap / r.penetration_length, th.penetration_factor);
  } else if (material.is_perfect_conductor()) {
    r.perfect_conductor = {true, false, std::numeric_limits<double>::infinity(),
                           th.penetration_factor};
  } else {
    // Dielectrics are never perfect conductors.
    r.perfect_conductor = {false, false, 0.0, th.penetration_factor};
  }

  r.stark = at_most(std::abs(field_v_per_m) / kStarkFieldScale, th.stark_fraction);
  const double bohr = PC::bohr_radius / geom.gap;
  r.backaction = at_most(bohr * bohr * bohr, th.backaction_max);
  return r;
}

std::vector<std::string> warning_codes(const ValidityReport& report, MethodKind method) {
  std::vector<std::string> codes;
  const bool closed_form = method == MethodKind::retarded_pc || method == MethodKind::nonretarded_pc;
  if (method != MethodKind::multipole_nr) {
    if (!report.dipole.ok) codes.emplace_back("dipole-approx");
    if (!report.multipole.ok) codes.emplace_back("use-multipole");
  }
  if ((method == MethodKind::nonretarded_pc || method == MethodKind::multipole_nr) &&
      !report.nonretarded.ok) {
    codes.emplace_back("retardation");
  }
  if (method == MethodKind::retarded_pc && !report.retarded.ok) {
    codes.emplace_back("not-retarded");
  }
  if (closed_form && !report.perfect_conductor.ok) codes.emplace_back("penetration");
  if (!report.stark.ok) codes.emplace_back("stark");
  if (!report.backaction.ok) codes.emplace_back("back-action");
  return codes;
}

}  // namespace casimir_knob
