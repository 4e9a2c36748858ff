#pragma once

// Test-side integrator, deliberately unrelated to the library's adaptive
// Gauss-Kronrod scheme: fixed composite Gauss-Legendre on logarithmic panels
// plus a reciprocal-mapped tail.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace reference {

template <std::size_t N>
struct GaussLegendre {
  std::array<double, N> nodes{};
  std::array<double, N> weights{};

  GaussLegendre() {
    for (std::size_t i = 0; i < N; ++i) {
      double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(N) + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= N; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
          p0 = p1;
          p1 = pk;
        }
        dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  template <class F>
  double operator()(F&& f, double a, double b) const {
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += weights[i] * f(m + h * nodes[i]);
    return s * h;
  }
};

// Integral of f over [0, inf) for integrands with features between
// scale * 1e-10 and scale * 1e10 and at most 1/x^2 decay beyond.
template <class F>
double integrate(F&& f, double scale, int panels_per_decade = 6) {
  static const GaussLegendre<24> gl;
  const double lo = scale * 1e-10;
  const double hi = scale * 1e10;
  double sum = gl(f, 0.0, lo);
  const int panels = 20 * panels_per_decade;
  const double ulo = std::log(lo), uhi = std::log(hi);
  for (int k = 0; k < panels; ++k) {
    const double a = ulo + (uhi - ulo) * k / panels;
    const double b = ulo + (uhi - ulo) * (k + 1) / panels;
    sum += gl([&](double u) { const double x = std::exp(u); return f(x) * x; }, a, b);
  }
  // xi = hi / t, t in (0, 1]
  for (int k = 0; k < 8; ++k) {
    const double a = std::ldexp(1.0, -k - 1), b = std::ldexp(1.0, -k);
    sum += gl([&](double t) { return f(hi / t) * hi / (t * t); }, a, b);
  }
  return sum;
}

}  // namespace reference
