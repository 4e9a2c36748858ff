#include "casimir_knob/units.hpp"

#include <cmath>
#include <string>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {

AngularFrequency ev_to_angular(double energy_ev) {
  if (!(energy_ev >= 0.0) || !std::isfinite(energy_ev)) {
    throw DomainError("ev_to_angular: energy must be finite and >= 0, got " +
                      std::to_string(energy_ev));
  }
  return AngularFrequency{energy_ev * PhysicalConstants::e_charge / PhysicalConstants::hbar};
}

double angular_to_ev(AngularFrequency omega) {
  return omega.value * PhysicalConstants::hbar / PhysicalConstants::e_charge;
}

Polarizability au_to_si_polarizability(double alpha_au) {
  if (!(alpha_au >= 0.0) || !std::isfinite(alpha_au)) {
    throw DomainError("au_to_si_polarizability: alpha must be finite and >= 0, got " +
                      std::to_string(alpha_au));
  }
  return Polarizability{alpha_au * kAtomicUnitPolarizability};
}

}  // namespace casimir_knob
