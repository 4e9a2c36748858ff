#include "casimir_knob/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

void require_xi(AngularFrequency xi, const char* where) {
  if (!(xi.value >= 0.0)) {
    throw DomainError(std::string(where) + ": xi must be >= 0, got " + std::to_string(xi.value));
  }
}

// Generic screening from eps; eps may be +inf.
double screening(double eps, double shift) {
  if (std::isinf(eps)) return 1.0;
  return (eps - 1.0) / (eps + shift);
}

}  // namespace

OscillatorModel::OscillatorModel(std::string name, std::vector<OscillatorTerm> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
  if (terms_.empty() || terms_.size() > 2) {
    throw DomainError("OscillatorModel '" + name_ + "': expected 1 or 2 oscillator terms, got " +
                      std::to_string(terms_.size()));
  }
  for (const auto& t : terms_) {
    if (!positive_finite(t.alpha_static.value) || !positive_finite(t.omega.value)) {
      throw DomainError("OscillatorModel '" + name_ +
                        "': oscillator strengths and frequencies must be > 0");
    }
  }
}

Polarizability OscillatorModel::static_polarizability() const noexcept {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.alpha_static.value;
  return Polarizability{sum};
}

AngularFrequency OscillatorModel::lowest_resonance() const noexcept {
  auto it = std::min_element(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
    return a.omega.value < b.omega.value;
  });
  return it->omega;
}

Polarizability atomic_polarizability(const OscillatorModel& model, AngularFrequency xi) {
  require_xi(xi, "atomic_polarizability");
  const double xi2 = xi.value * xi.value;
  double sum = 0.0;
  for (const auto& t : model.terms()) {
    const double w2 = t.omega.value * t.omega.value;
    sum += w2 * t.alpha_static.value / (w2 + xi2);
  }
  return Polarizability{sum};
}

DielectricModel::DielectricModel(std::string name, Variant model)
    : name_(std::move(name)), model_(std::move(model)) {
  auto bad = [this](const char* what) {
    throw DomainError("DielectricModel '" + name_ + "': " + what);
  };
  if (const auto* d = std::get_if<Drude>(&model_)) {
    if (!positive_finite(d->plasma.value) || !positive_finite(d->damping.value)) {
      bad("Drude plasma frequency and damping must be > 0");
    }
  } else if (const auto* dl = std::get_if<DrudeLorentz>(&model_)) {
    if (dl->terms.empty()) bad("Drude-Lorentz model needs at least one term");
    for (const auto& t : dl->terms) {
      if (!positive_finite(t.plasma.value) || !positive_finite(t.transverse.value) ||
          !positive_finite(t.damping.value)) {
        bad("Drude-Lorentz frequencies and rates must be > 0");
      }
    }
  }
}

double permittivity(const DielectricModel& model, AngularFrequency xi) {
  require_xi(xi, "permittivity");
  const double x = xi.value;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Drude>) {
          if (x == 0.0) {
            throw PoleError("permittivity: Drude model '" + model.name() +
                            "' diverges at xi = 0; use mie_factor for the static limit");
          }
          const double wp = m.plasma.value;
          return 1.0 + wp * wp / (m.damping.value * x + x * x);
        } else if constexpr (std::is_same_v<T, DrudeLorentz>) {
          double eps = 1.0;
          for (const auto& t : m.terms) {
            const double wp = t.plasma.value;
            const double wt = t.transverse.value;
            eps += wp * wp / (wt * wt + t.damping.value * x + x * x);
          }
          return eps;
        } else {
          return std::numeric_limits<double>::infinity();
        }
      },
      model.model());
}

double multipole_factor(const DielectricModel& model, AngularFrequency xi, int l) {
  require_xi(xi, "multipole_factor");
  if (l < 1) throw DomainError("multipole_factor: order l must be >= 1");
  const double shift = static_cast<double>(l + 1) / static_cast<double>(l);
  if (const auto* d = std::get_if<Drude>(&model.model())) {
    // (eps-1)/(eps+k) = 1 / (1 + (1+k)(gamma xi + xi^2) / wp^2), finite at xi = 0.
    const double x = xi.value;
    const double wp = d->plasma.value;
    return 1.0 / (1.0 + (1.0 + shift) * (d->damping.value * x + x * x) / (wp * wp));
  }
  return screening(permittivity(model, xi), shift);
}

double mie_factor(const DielectricModel& model, AngularFrequency xi) {
  return multipole_factor(model, xi, 1);
}

Polarizability sphere_polarizability(const DielectricModel& model, double radius_m,
                                     AngularFrequency xi) {
  if (!(radius_m >= 0.0) || !std::isfinite(radius_m)) {
    throw DomainError("sphere_polarizability: radius must be finite and >= 0");
  }
  return Polarizability{kFourPiEps0 * radius_m * radius_m * radius_m * mie_factor(model, xi)};
}

}  // namespace casimir_knob
