#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "casimir_knob/units.hpp"

namespace casimir_knob {

/// One Lorentz-oscillator contribution omega^2 alpha(0) / (omega^2 + xi^2).
struct OscillatorTerm {
  Polarizability alpha_static;
  AngularFrequency omega;
};

/// Ground-state atomic polarizability on the imaginary frequency axis, as a
/// sum of one or two undamped oscillators.
class OscillatorModel {
 public:
  /// Throws DomainError unless 1 <= terms.size() <= 2 and every term has
  /// alpha_static > 0 and omega > 0.
  OscillatorModel(std::string name, std::vector<OscillatorTerm> terms);

  const std::string& name() const noexcept { return name_; }
  std::span<const OscillatorTerm> terms() const noexcept { return terms_; }
  bool single_oscillator() const noexcept { return terms_.size() == 1; }

  Polarizability static_polarizability() const noexcept;
  AngularFrequency lowest_resonance() const noexcept;

 private:
  std::string name_;
  std::vector<OscillatorTerm> terms_;
};

/// Sum over terms of omega_k^2 alpha_k(0) / (omega_k^2 + xi^2).
Polarizability atomic_polarizability(const OscillatorModel& model, AngularFrequency xi);

/// eps(i xi) = 1 + omega_p^2 / (gamma xi + xi^2)
struct Drude {
  AngularFrequency plasma;
  AngularFrequency damping;
};

struct LorentzTerm {
  AngularFrequency plasma;
  AngularFrequency transverse;
  AngularFrequency damping;
};

/// eps(i xi) = 1 + sum_k omega_pk^2 / (omega_Tk^2 + gamma_k xi + xi^2)
struct DrudeLorentz {
  std::vector<LorentzTerm> terms;
};

/// The eps -> infinity limit, handled exactly rather than as a large number.
struct PerfectConductor {};

class DielectricModel {
 public:
  using Variant = std::variant<Drude, DrudeLorentz, PerfectConductor>;

  /// Throws DomainError if any frequency or rate is not strictly positive or
  /// a Drude-Lorentz model has no terms.
  DielectricModel(std::string name, Variant model);

  const std::string& name() const noexcept { return name_; }
  const Variant& model() const noexcept { return model_; }

  bool is_drude_metal() const noexcept { return std::holds_alternative<Drude>(model_); }
  bool is_perfect_conductor() const noexcept {
    return std::holds_alternative<PerfectConductor>(model_);
  }

 private:
  std::string name_;
  Variant model_;
};

/// Relative permittivity eps(i xi). Returns +infinity for PerfectConductor.
/// Throws PoleError for a Drude model at xi = 0 and DomainError for xi < 0.
double permittivity(const DielectricModel& model, AngularFrequency xi);

/// Static-multipole screening factor (eps - 1) / (eps + (l + 1) / l) for
/// multipole order l >= 1. Exactly 1 for a perfect conductor and for a Drude
/// metal at xi = 0.
double multipole_factor(const DielectricModel& model, AngularFrequency xi, int l);

/// Dipole (l = 1) case, (eps - 1) / (eps + 2). Lies in [0, 1].
double mie_factor(const DielectricModel& model, AngularFrequency xi);

/// 4 pi eps0 R^3 mie_factor(xi). R = 0 gives 0; negative R throws.
Polarizability sphere_polarizability(const DielectricModel& model, double radius_m,
                                     AngularFrequency xi);

}  // namespace casimir_knob
