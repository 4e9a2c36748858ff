#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "casimir_knob/catalog.hpp"
#include "casimir_knob/dispersion.hpp"

using namespace casimir_knob;

namespace {

bool has(const std::vector<std::string>& codes, const std::string& code) {
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

}  // namespace

TEST_SUITE("regime") {
  TEST_CASE("H at 700 nm is not in the non-retarded regime") {
    const auto r = regime_report(find_atom("H"), find_material("Au"),
                                 Geometry::make(60e-9, 700e-9), 1e5);
    CHECK_FALSE(r.nonretarded.ok);
    CHECK(r.nonretarded.ratio == doctest::Approx(760e-9 / 106.4e-9).epsilon(1e-3));
    CHECK(r.stark.ok);
    CHECK(r.dipole.ok);
    CHECK(r.multipole.ok);
    CHECK(r.backaction.ok);
  }

  TEST_CASE("Stark bound") {
    const auto g = Geometry::make(60e-9, 700e-9);
    CHECK(regime_report(find_atom("Cs"), find_material("Au"), g, 1e5).stark.ok);
    CHECK_FALSE(regime_report(find_atom("Cs"), find_material("Au"), g, 5e8).stark.ok);
  }

  TEST_CASE("back-action ratio at a = 5 angstrom") {
    const auto r =
        regime_report(find_atom("H"), find_material("Au"), Geometry::make(60e-9, 5e-10), 1e5);
    const double ratio = std::pow(PhysicalConstants::bohr_radius / 5e-10, 3);
    CHECK(r.backaction.ratio == doctest::Approx(ratio));
    CHECK(r.backaction.ratio > 1e-3);
    CHECK(r.backaction.ratio < 2e-3);
    CHECK_FALSE(r.backaction.ok);
  }

  TEST_CASE("dipole and multipole thresholds") {
    const auto& h = find_atom("H");
    const auto& au = find_material("Au");
    auto at = [&](double a) { return regime_report(h, au, Geometry::make(60e-9, a), 0.0); };
    CHECK(at(300e-9).dipole.ok);  // R/a = 0.2
    CHECK_FALSE(at(250e-9).dipole.ok);
    CHECK(at(250e-9).multipole.ok);
    CHECK(at(60e-9).multipole.ok);  // R/a = 1
    CHECK_FALSE(at(50e-9).multipole.ok);
  }

  TEST_CASE("penetration length proxy") {
    const auto r =
        regime_report(find_atom("H"), find_material("Au"), Geometry::make(60e-9, 100e-9), 0.0);
    CHECK(r.penetration_length == doctest::Approx(PhysicalConstants::c / 1.37e16));
    CHECK_FALSE(r.perfect_conductor.ok);
    CHECK(r.perfect_conductor.applicable);
    const auto far =
        regime_report(find_atom("H"), find_material("Au"), Geometry::make(60e-9, 700e-9), 0.0);
    CHECK(far.perfect_conductor.ok);

    const auto ideal = regime_report(find_atom("H"), find_material("PC"),
                                     Geometry::make(60e-9, 100e-9), 0.0);
    CHECK(ideal.perfect_conductor.ok);
    CHECK_FALSE(ideal.perfect_conductor.applicable);
    const auto glass = regime_report(find_atom("H"), find_material("SiO2"),
                                     Geometry::make(60e-9, 100e-9), 0.0);
    CHECK_FALSE(glass.perfect_conductor.ok);
    CHECK(glass.penetration_length == 0.0);
  }

  TEST_CASE("retarded regime check") {
    const auto& h = find_atom("H");
    CHECK(regime_report(h, find_material("PC"), Geometry::make(60e-9, 700e-9), 0.0).retarded.ok);
    CHECK_FALSE(
        regime_report(h, find_material("PC"), Geometry::make(60e-9, 20e-9), 0.0).retarded.ok);
  }

  TEST_CASE("warning codes depend on the method") {
    const auto r =
        regime_report(find_atom("H"), find_material("Au"), Geometry::make(60e-9, 20e-9), 1e9);
    const auto full = warning_codes(r, MethodKind::dipole_full);
    CHECK(has(full, "dipole-approx"));
    CHECK(has(full, "use-multipole"));
    CHECK(has(full, "stark"));
    CHECK_FALSE(has(full, "penetration"));
    CHECK_FALSE(has(full, "retardation"));

    const auto multi = warning_codes(r, MethodKind::multipole_nr);
    CHECK_FALSE(has(multi, "dipole-approx"));
    CHECK_FALSE(has(multi, "use-multipole"));
    CHECK(has(multi, "retardation"));  // z_a = 80 nm > 10.6 nm

    const auto ret = warning_codes(r, MethodKind::retarded_pc);
    CHECK(has(ret, "not-retarded"));
    CHECK(has(ret, "penetration"));

    const auto quiet =
        regime_report(find_atom("H"), find_material("Au"), Geometry::make(60e-9, 700e-9), 1e5);
    CHECK(warning_codes(quiet, MethodKind::dipole_full).empty());
  }
}
