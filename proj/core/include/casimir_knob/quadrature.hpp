#pragma once

#include <cstddef>
#include <functional>

namespace casimir_knob {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  // Absolute error floor, in the units of the integral.
  double abs_floor = 0.0;
  int max_refinements = 30;
  // Characteristic decay scale of the integrand (rad/s for frequency
  // integrals). The interval [0, inf) is mapped by xi = scale t / (1 - t).
  double scale_hint = 1.0;

  // Throws DomainError unless rel_tol in (0, 1e-2], max_refinements >= 1,
  // abs_floor >= 0 and scale_hint > 0.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// Integral of f over [0, inf). Panels are refined level by level, each pass
// bisecting every panel whose error exceeds its width-proportional share of
// the target max(rel_tol |I|, abs_floor). Results are bit-reproducible.
//
// A run that exhausts max_refinements returns converged = false rather than
// throwing. A NaN or infinite integrand value throws QuadratureError
// carrying the offending xi.
QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec);

}  // namespace casimir_knob
