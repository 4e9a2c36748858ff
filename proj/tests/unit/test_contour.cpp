#include <doctest.h>

#include <cmath>

#include "casimir_knob/contour.hpp"
#include "casimir_knob/errors.hpp"

using namespace casimir_knob;

namespace {

Grid2D sample(int n, double lo, double hi, double (*f)(double, double)) {
  Grid2D g;
  for (int i = 0; i < n; ++i) g.xs.push_back(lo + (hi - lo) * i / (n - 1));
  g.ys = g.xs;
  for (double y : g.ys) {
    for (double x : g.xs) g.values.push_back(f(x, y));
  }
  return g;
}

}  // namespace

TEST_SUITE("contour") {
  TEST_CASE("straight line level set is exact") {
    const auto g = sample(5, 0.0, 1.0, [](double x, double) { return x - 0.3; });
    const auto lines = marching_squares(g, 0.0);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].size() == 5);
    for (const auto& p : lines[0]) CHECK(p.x == doctest::Approx(0.3));
    CHECK(lines[0].front().y != lines[0].back().y);
  }

  TEST_CASE("circle becomes a closed loop close to the true radius") {
    const auto g = sample(41, -1.0, 1.0, [](double x, double y) { return x * x + y * y; });
    const auto lines = marching_squares(g, 0.25);
    REQUIRE(lines.size() == 1);
    const auto& loop = lines[0];
    CHECK(loop.front().x == loop.back().x);
    CHECK(loop.front().y == loop.back().y);
    for (const auto& p : loop) CHECK(std::hypot(p.x, p.y) == doctest::Approx(0.5).epsilon(5e-3));
  }

  TEST_CASE("no crossing gives no lines") {
    const auto g = sample(4, 0.0, 1.0, [](double x, double y) { return -1.0 - x - y; });
    CHECK(marching_squares(g, 0.0).empty());
  }

  TEST_CASE("saddle cells resolve by the cell average") {
    Grid2D g{{0.0, 1.0}, {0.0, 1.0}, {1.0, -1.0, -1.0, 3.0}};
    // average 0.5 >= 0: the positive corners join, giving two separate arcs
    const auto lines = marching_squares(g, 0.0);
    CHECK(lines.size() == 2);
  }

  TEST_CASE("samples equal to the level count as above") {
    Grid2D g{{0.0, 1.0, 2.0}, {0.0, 1.0}, {0.0, -1.0, -1.0, 0.0, -1.0, -1.0}};
    const auto lines = marching_squares(g, 0.0);
    REQUIRE(lines.size() == 1);
    for (const auto& p : lines[0]) CHECK(p.x == doctest::Approx(0.0));
  }

  TEST_CASE("bad grids") {
    CHECK_THROWS_AS(marching_squares(Grid2D{{0.0}, {0.0, 1.0}, {1.0, 2.0}}, 0.0), DomainError);
    CHECK_THROWS_AS(marching_squares(Grid2D{{0.0, 1.0}, {0.0, 1.0}, {1.0, 2.0}}, 0.0),
                    DomainError);
  }
}
