#include "casimir_knob/presets.hpp"

#include <stdexcept>

namespace casimir_knob {
namespace {

constexpr double nm(double x) { return x / 1e9; }
constexpr double kRadius = nm(60);

SweepConfig base(std::string scenario, std::string atom, std::string material) {
  SweepConfig c;
  c.scenario = std::move(scenario);
  c.atom = std::move(atom);
  c.material = std::move(material);
  c.radius = kRadius;
  c.method = DispersionMethod::dipole_full();
  return c;
}

SeriesSpec numeric_series(SweepVariable v, std::vector<double> values) {
  return SeriesSpec{std::string(variable_name(v)), {}, std::move(values)};
}

SeriesSpec named_series(std::string key, std::vector<std::string> names) {
  return SeriesSpec{std::move(key), std::move(names), {}};
}

PlotSpec line_plot(SweepVariable x, std::string title, bool log_x = false) {
  PlotSpec p;
  p.kind = PlotKind::line;
  p.x = x;
  p.title = std::move(title);
  p.log_x = log_x;
  return p;
}

PlotSpec contour_plot(SweepVariable x, SweepVariable y, std::string title) {
  PlotSpec p;
  p.kind = PlotKind::contour;
  p.x = x;
  p.y = y;
  p.title = std::move(title);
  p.log_y = y == SweepVariable::field;
  return p;
}

FigurePreset figure2() {
  auto c = base("fig2", "H", "Au");
  c.gap = nm(700);
  c.axes = {{SweepVariable::theta0, 0.0, 2 * kPi, 181, Spacing::linear}};
  c.series = numeric_series(SweepVariable::field, {2e4, 6e4, 1e5});
  return {2, "H / Au sphere, a = 700 nm: gamma against field angle",
          {{"", c, line_plot(SweepVariable::theta0, "H, Au, a = 700 nm")}}};
}

FigurePreset figure3() {
  auto c = base("fig3", "H", "Au");
  c.theta0 = kPi / 2;
  c.axes = {{SweepVariable::field, 1e4, 1.5e5, 141, Spacing::linear}};
  c.series = numeric_series(SweepVariable::gap, {nm(500), nm(600), nm(700), nm(800)});
  return {3, "H / Au sphere, theta0 = pi/2: gamma against field intensity",
          {{"", c, line_plot(SweepVariable::field, "H, Au, θ₀ = π/2")}}};
}

FigurePreset figure4() {
  auto c = base("fig4", "H", "Au");
  c.axes = {{SweepVariable::gap, nm(300), nm(1000), 141, Spacing::linear}};
  c.series = numeric_series(SweepVariable::field, {5e4, 7e4, 9e4, 1.1e5});
  return {4, "H / Au sphere: gamma against distance",
          {{"", c, line_plot(SweepVariable::gap, "H, Au, θ₀ = π/2")}}};
}

FigurePreset figure5() {
  auto c = base("fig5", "H", "Au");
  c.method = DispersionMethod::multipole_nr();
  c.axes = {{SweepVariable::gap, nm(5), nm(100), 96, Spacing::linear}};
  c.series = numeric_series(SweepVariable::field, {2.5e6, 5e6, 7.5e6, 1e7});
  return {5, "H / Au sphere at short distance (multipole series)",
          {{"", c, line_plot(SweepVariable::gap, "H, Au, multipole series")}}};
}

const std::vector<std::string> kAlkaliAndIron = {"Na", "K", "Fe", "Rb", "Cs"};

FigurePreset figure6() {
  auto a = base("fig6a", "Na", "Au");
  a.field = 1e5;
  a.axes = {{SweepVariable::gap, nm(400), nm(700), 121, Spacing::linear}};
  a.series = named_series("atom", kAlkaliAndIron);

  auto b = base("fig6b", "Na", "Au");
  b.gap = nm(500);
  b.axes = {{SweepVariable::field, 2e4, 2e5, 121, Spacing::log}};
  b.series = named_series("atom", kAlkaliAndIron);

  return {6, "Atom catalog near an Au sphere",
          {{"a", a, line_plot(SweepVariable::gap, "E₀ = 1e5 V/m")},
           {"b", b, line_plot(SweepVariable::field, "a = 500 nm", true)}}};
}

FigurePreset figure7() {
  auto a = base("fig7a", "Cs", "Au");
  a.gap = nm(700);
  a.axes = {{SweepVariable::theta0, 0.0, kPi, 61, Spacing::linear},
            {SweepVariable::field, 1e4, 3e5, 41, Spacing::log}};

  auto b = base("fig7b", "Cs", "Au");
  b.axes = {{SweepVariable::gap, nm(300), nm(1000), 57, Spacing::linear},
            {SweepVariable::field, 1e4, 3e5, 41, Spacing::log}};

  return {7, "Cs near an Au sphere: sign of gamma",
          {{"a", a, contour_plot(SweepVariable::theta0, SweepVariable::field, "a = 700 nm")},
           {"b", b, contour_plot(SweepVariable::gap, SweepVariable::field, "θ₀ = π/2")}}};
}

FigurePreset figure8() {
  auto a = base("fig8a", "Cs", "Au");
  a.field = 7e4;
  a.axes = {{SweepVariable::gap, nm(300), nm(1000), 141, Spacing::linear}};
  a.series = named_series("material", {"Au", "SiO2"});

  auto b = base("fig8b", "Cs", "Au");
  b.field = 9e6;
  b.method = DispersionMethod::multipole_nr();
  b.axes = {{SweepVariable::gap, nm(5), nm(100), 96, Spacing::linear}};
  b.series = named_series("material", {"Au", "SiO2"});

  return {8, "Cs near Au and SiO2 spheres",
          {{"a", a, line_plot(SweepVariable::gap, "E₀ = 7e4 V/m")},
           {"b", b, line_plot(SweepVariable::gap, "E₀ = 9e6 V/m, multipole series")}}};
}

}  // namespace

FigurePreset figure_preset(int id) {
  switch (id) {
    case 2: return figure2();
    case 3: return figure3();
    case 4: return figure4();
    case 5: return figure5();
    case 6: return figure6();
    case 7: return figure7();
    case 8: return figure8();
    default:
      throw std::out_of_range("figure_preset: id " + std::to_string(id) + " outside " +
                              std::to_string(kFirstFigure) + ".." + std::to_string(kLastFigure));
  }
}

}  // namespace casimir_knob
