#pragma once

#include <numbers>

namespace casimir_knob {

// CODATA 2018 values, SI units.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;        // J s
  static constexpr double c = 299792458.0;               // m / s
  static constexpr double eps0 = 8.8541878128e-12;       // C^2 N^-1 m^-2
  static constexpr double e_charge = 1.602176634e-19;    // C
  static constexpr double bohr_radius = 5.29177210903e-11;  // m
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPiEps0 = 4.0 * kPi * PhysicalConstants::eps0;

// 1 atomic unit of polarizability in C^2 m^2 / J, as quoted with the
// oscillator tables.
inline constexpr double kAtomicUnitPolarizability = 1.648e-41;

// Angular frequency in rad/s. Used both for real resonances and for the
// imaginary-axis variable xi.
struct AngularFrequency {
  double value = 0.0;

  constexpr AngularFrequency() = default;
  constexpr explicit AngularFrequency(double rad_per_s) : value(rad_per_s) {}

  friend constexpr auto operator<=>(AngularFrequency, AngularFrequency) = default;
};

// Electric polarizability in C^2 m^2 / J.
struct Polarizability {
  double value = 0.0;

  constexpr Polarizability() = default;
  constexpr explicit Polarizability(double si) : value(si) {}

  friend constexpr auto operator<=>(Polarizability, Polarizability) = default;
  friend constexpr Polarizability operator+(Polarizability a, Polarizability b) {
    return Polarizability{a.value + b.value};
  }
};

// Photon energy in eV to angular frequency E e / hbar. Throws DomainError for
// negative input.
AngularFrequency ev_to_angular(double energy_ev);

// Inverse of ev_to_angular; used when printing catalogs.
double angular_to_ev(AngularFrequency omega);

// Atomic units to SI. Throws DomainError for negative input.
Polarizability au_to_si_polarizability(double alpha_au);

}  // namespace casimir_knob
