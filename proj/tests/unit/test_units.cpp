#include <doctest.h>

#include "casimir_knob/errors.hpp"
#include "casimir_knob/units.hpp"
#include "test_util.hpp"

using namespace casimir_knob;
using test_util::rel_err;

TEST_SUITE("units") {
  TEST_CASE("constants are CODATA 2018") {
    CHECK(PhysicalConstants::hbar == 1.054571817e-34);
    CHECK(PhysicalConstants::c == 299792458.0);
    CHECK(PhysicalConstants::eps0 == 8.8541878128e-12);
    CHECK(PhysicalConstants::e_charge == 1.602176634e-19);
  }

  TEST_CASE("ev_to_angular") {
    CHECK(ev_to_angular(0.0).value == 0.0);
    // e / hbar
    CHECK(rel_err(ev_to_angular(1.0).value, 1519267448809510.5) < 1e-15);
    CHECK(rel_err(ev_to_angular(11.65).value, 1.7699465778630797e16) < 1e-14);
    CHECK_THROWS_AS(ev_to_angular(-1.0), DomainError);
  }

  TEST_CASE("angular_to_ev inverts ev_to_angular") {
    for (double ev : {0.01, 1.53, 11.65, 123.8}) {
      CHECK(rel_err(angular_to_ev(ev_to_angular(ev)), ev) < 1e-15);
    }
  }

  TEST_CASE("au_to_si_polarizability") {
    CHECK(au_to_si_polarizability(1.0).value == 1.648e-41);
    CHECK(au_to_si_polarizability(0.0).value == 0.0);
    CHECK(rel_err(au_to_si_polarizability(4.5).value, 7.416e-41) < 1e-15);
    CHECK_THROWS_AS(au_to_si_polarizability(-0.1), DomainError);
  }

  TEST_CASE("strong types compare and add") {
    CHECK(AngularFrequency{1.0} < AngularFrequency{2.0});
    CHECK((Polarizability{1.0} + Polarizability{2.0}).value == 3.0);
  }
}
