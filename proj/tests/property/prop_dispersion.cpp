#include <doctest.h>

#include <cmath>

#include "casimir_knob/catalog.hpp"
#include "casimir_knob/dispersion.hpp"
#include "test_util.hpp"

using namespace casimir_knob;
using test_util::rel_err;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

QuadratureSpec spec(double tol) {
  QuadratureSpec s;
  s.rel_tol = tol;
  return s;
}

}  // namespace

TEST_SUITE("properties.dispersion") {
  TEST_CASE("energies and forces are attractive everywhere") {
    const double r = 5e-9;
    for (const auto& atom : atom_catalog()) {
      for (const auto& mat : material_catalog()) {
        for (double z : log_grid(10e-9, 10e-6, 13)) {
          const auto g = Geometry::make(r, z - r);
          CHECK(dispersion_energy_dipole(atom.model, mat.model, g).value < 0.0);
          CHECK(dispersion_force_dipole(atom.model, mat.model, g).value < 0.0);
          const auto m =
              dispersion_multipole_nr(atom.model, mat.model, g, MultipoleOptions{});
          CHECK(m.energy.value < 0.0);
          CHECK(m.force.value < 0.0);
        }
      }
    }
  }

  TEST_CASE("energy rises toward zero with slope between the two power laws") {
    const double r = 60e-9;
    for (const auto& atom : atom_catalog()) {
      for (const auto& mat : material_catalog()) {
        double prev = -INFINITY;
        for (double z : log_grid(70e-9, 10e-6, 25)) {
          const auto g = Geometry::make(r, z - r);
          const double u = dispersion_energy_dipole(atom.model, mat.model, g, spec(1e-10)).value;
          const double f = dispersion_force_dipole(atom.model, mat.model, g, spec(1e-10)).value;
          CHECK(u > prev);
          prev = u;
          const double slope = z * f / u;  // -d ln|U| / d ln z
          CHECK(slope >= 6.0 - 1e-8);
          CHECK(slope <= 7.0 + 1e-8);
        }
      }
    }
  }

  TEST_CASE("analytic force matches the derivative of the energy") {
    const double r = 60e-9;
    for (const char* atom_name : {"H", "Cs"}) {
      const auto& atom = find_atom(atom_name);
      for (const char* mat_name : {"Au", "SiO2"}) {
        const auto& mat = find_material(mat_name);
        for (double z : log_grid(100e-9, 10e-6, 20)) {
          auto u = [&](double zz) {
            return dispersion_energy_dipole(atom, mat, Geometry::make(r, zz - r), spec(1e-13)).value;
          };
          // Richardson-extrapolated central difference, O(h^4)
          const double h = 1e-3 * z;
          const double d1 = (u(z + h) - u(z - h)) / (2 * h);
          const double d2 = (u(z + 2 * h) - u(z - 2 * h)) / (4 * h);
          const double fd = -(4 * d1 - d2) / 3;
          const double f =
              dispersion_force_dipole(atom, mat, Geometry::make(r, z - r), spec(1e-13)).value;
          CHECK(rel_err(f, fd) <= 1e-6);
        }
      }
    }
  }

  TEST_CASE("multipole partial sums decrease monotonically and settle") {
    const auto& atom = find_atom("Cs");
    const auto g = Geometry::make(60e-9, 15e-9);
    for (const char* mat_name : {"Au", "SiO2", "PerfectConductor"}) {
      const auto& mat = find_material(mat_name);
      double prev = 0.0, prev_step = INFINITY;
      for (int l = 1; l <= 40; ++l) {
        const double u =
            dispersion_multipole_nr(atom, mat, g, {l, std::nullopt}).energy.value;
        const double step = prev - u;
        CHECK(step > 0.0);
        // prefactor growth can outrun (R/z)^2 for the first few orders
        if (l > 10) CHECK(step < prev_step);
        prev = u;
        prev_step = step;
      }
      const auto done = dispersion_multipole_nr(atom, mat, g, MultipoleOptions{2000, 1e-10});
      CHECK(done.energy.converged);
      CHECK(std::abs(done.energy.value - prev) < 1e-3 * std::abs(done.energy.value));
    }
  }
}
