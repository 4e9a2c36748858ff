#pragma once

#include <stdexcept>
#include <string>

namespace casimir_knob {

// Argument outside the mathematical domain of an operation (negative
// polarizability, atom inside the sphere, non-unit direction, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Drude permittivity evaluated at its xi = 0 pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Integrand produced a non-finite value; carries the offending abscissa.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

// Electrostatic force is attractive for the requested orientation, so no
// field strength can balance the dispersive attraction.
class NoCrossoverError : public std::runtime_error {
 public:
  NoCrossoverError(const std::string& what, double unit_field_force)
      : std::runtime_error(what), unit_field_force_(unit_field_force) {}
  double unit_field_force() const noexcept { return unit_field_force_; }

 private:
  double unit_field_force_;
};

// Root bracket does not enclose a sign change.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double gamma_lo, double gamma_hi)
      : std::runtime_error(what), gamma_lo_(gamma_lo), gamma_hi_(gamma_hi) {}
  double gamma_lo() const noexcept { return gamma_lo_; }
  double gamma_hi() const noexcept { return gamma_hi_; }

 private:
  double gamma_lo_;
  double gamma_hi_;
};

// Invalid user configuration (unknown catalog name, bad sweep axis, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace casimir_knob
