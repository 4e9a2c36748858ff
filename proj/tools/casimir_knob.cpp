// casimir-knob: sweeps, critical fields and figure presets for the
// atom/nanosphere force balance.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input or no crossover,
// 3 partial result (some rows flagged).

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir_knob/analysis.hpp"
#include "casimir_knob/catalog.hpp"
#include "casimir_knob/errors.hpp"
#include "casimir_knob/presets.hpp"
#include "casimir_knob/svg.hpp"
#include "casimir_knob/sweep.hpp"
#include "casimir_knob/sweep_io.hpp"

namespace ck = casimir_knob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPartial = 3;

constexpr double kNmPerM = 1e9;
constexpr double kDeg = ck::kPi / 180.0;

struct CommonArgs {
  std::string atom;
  std::string material;
  double radius_nm = 0;
  double distance_nm = 0;
  double field = 0;
  double theta_deg = 0;
  std::string method;
  int lmax = 0;
  double tail_tol = 0;
  double rel_tol = 0;
  std::string electrostatics;
  int workers = 0;
  std::string out;
  std::string format;
  std::string svg;
  std::string config;

  CLI::Option* o_atom = nullptr;
  CLI::Option* o_material = nullptr;
  CLI::Option* o_radius = nullptr;
  CLI::Option* o_distance = nullptr;
  CLI::Option* o_field = nullptr;
  CLI::Option* o_theta = nullptr;
  CLI::Option* o_method = nullptr;
  CLI::Option* o_lmax = nullptr;
  CLI::Option* o_tail = nullptr;
  CLI::Option* o_rel = nullptr;
  CLI::Option* o_electrostatics = nullptr;
  CLI::Option* o_workers = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_svg = nullptr;
};

void add_common(CLI::App* app, CommonArgs& a) {
  a.o_atom = app->add_option("--atom", a.atom, "Atom from the catalog (H, Na, K, Fe, Rb, Cs)");
  a.o_material = app->add_option("--material", a.material, "Sphere material (Au, SiO2, PerfectConductor or PC)");
  a.o_radius = app->add_option("--radius-nm", a.radius_nm, "Sphere radius R in nm");
  a.o_distance = app->add_option("--distance-nm", a.distance_nm, "Surface-atom gap a in nm");
  a.o_field = app->add_option("--field", a.field, "Applied field E0 in V/m");
  a.o_theta = app->add_option("--theta-deg", a.theta_deg, "Field angle theta0 in degrees");
  a.o_method = app->add_option("--method", a.method,
                               "dipole-full|retarded-pc|nonretarded-pc|multipole-nr|auto");
  a.o_lmax = app->add_option("--lmax", a.lmax, "Multipole order cap");
  a.o_tail = app->add_option("--tail-tol", a.tail_tol,
                             "Multipole tail tolerance; 0 sums exactly --lmax terms");
  a.o_rel = app->add_option("--rel-tol", a.rel_tol, "Quadrature relative tolerance");
  a.o_electrostatics = app->add_option("--electrostatics", a.electrostatics,
                                       "full|small-sphere electrostatic force");
  a.o_workers = app->add_option("--workers", a.workers,
                                "Worker threads (0: all cores; default CASIMIR_KNOB_WORKERS)");
  a.o_out = app->add_option("--out", a.out, "Output path (default stdout)");
  a.o_format = app->add_option("--format", a.format, "csv|json");
  a.o_svg = app->add_option("--svg", a.svg, "Also write an SVG plot to this path");
  app->add_option("--config", a.config, "JSON scenario config; flags override its fields");
}

// Defaults, then the config file, then explicit flags.
ck::SweepConfig resolve_config(const CommonArgs& a) {
  ck::SweepConfig base;
  base.workers = -1;  // unset marker
  ck::SweepConfig c = a.config.empty() ? base : ck::load_config(a.config, base);

  if (*a.o_atom) c.atom = a.atom;
  if (*a.o_material) c.material = a.material;
  if (*a.o_radius) c.radius = a.radius_nm / kNmPerM;
  if (*a.o_distance) c.gap = a.distance_nm / kNmPerM;
  if (*a.o_field) c.field = a.field;
  if (*a.o_theta) c.theta0 = a.theta_deg * kDeg;
  if (*a.o_method) c.method.kind = ck::parse_method(a.method);
  if (*a.o_lmax) c.method.multipole.l_max = a.lmax;
  if (*a.o_tail) {
    if (a.tail_tol == 0.0) {
      c.method.multipole.tail_tol.reset();
    } else {
      c.method.multipole.tail_tol = a.tail_tol;
    }
  }
  if (*a.o_rel) c.quadrature.rel_tol = a.rel_tol;
  if (*a.o_electrostatics) {
    if (a.electrostatics == "full") {
      c.electrostatics = ck::ElectrostaticModel::full;
    } else if (a.electrostatics == "small-sphere") {
      c.electrostatics = ck::ElectrostaticModel::small_sphere;
    } else {
      throw ck::ValidationError("--electrostatics must be 'full' or 'small-sphere'");
    }
  }
  if (*a.o_out) c.output.path = a.out;
  if (*a.o_format) c.output.format = ck::parse_format(a.format);
  if (*a.o_svg) c.output.svg_path = a.svg;

  if (*a.o_workers) {
    c.workers = a.workers;
  } else if (c.workers < 0) {
    c.workers = std::getenv("CASIMIR_KNOB_WORKERS") ? ck::default_workers() : 1;
  }
  return c;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ck::ValidationError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ck::ValidationError("failed writing '" + path + "'");
}

// Axis flags use the CLI units: degrees for theta0, V/m for E0, nm for a.
double to_si(ck::SweepVariable v, double x) {
  switch (v) {
    case ck::SweepVariable::theta0: return x * kDeg;
    case ck::SweepVariable::field: return x;
    case ck::SweepVariable::gap: return x / kNmPerM;
  }
  return x;
}

struct AxisArgs {
  double from = 0;
  double to = 0;
  int points = 0;
  bool log = false;
  CLI::Option* o_from = nullptr;
  CLI::Option* o_to = nullptr;
  CLI::Option* o_points = nullptr;
  CLI::Option* o_log = nullptr;

  bool given() const { return *o_from || *o_to || *o_points || *o_log; }
};

void add_axis(CLI::App* app, AxisArgs& ax, const std::string& prefix, const std::string& unit) {
  ax.o_from = app->add_option("--" + prefix + "from", ax.from, "Axis start (" + unit + ")");
  ax.o_to = app->add_option("--" + prefix + "to", ax.to, "Axis end (" + unit + ")");
  ax.o_points = app->add_option("--" + prefix + "points", ax.points, "Grid points (>= 2)");
  ax.o_log = app->add_flag("--" + prefix + "log", ax.log, "Logarithmic spacing");
}

ck::SweepAxis default_axis(ck::SweepVariable v) {
  switch (v) {
    case ck::SweepVariable::theta0: return {v, 0.0, 2 * ck::kPi, 181, ck::Spacing::linear};
    case ck::SweepVariable::field: return {v, 1e4, 2e5, 96, ck::Spacing::linear};
    case ck::SweepVariable::gap: return {v, 300 / kNmPerM, 1000 / kNmPerM, 141, ck::Spacing::linear};
  }
  return {};
}

ck::SweepAxis merge_axis(ck::SweepAxis axis, const AxisArgs& ax) {
  if (*ax.o_from) axis.min = to_si(axis.variable, ax.from);
  if (*ax.o_to) axis.max = to_si(axis.variable, ax.to);
  if (*ax.o_points) axis.points = ax.points;
  if (*ax.o_log) axis.spacing = ax.log ? ck::Spacing::log : ck::Spacing::linear;
  return axis;
}

// "--series VAR=v1,v2": VAR is atom, material, theta0 (deg), E0 (V/m) or a (nm).
ck::SeriesSpec parse_series(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ck::ValidationError("--series expects VAR=v1,v2,... (got '" + text + "')");
  }
  ck::SeriesSpec s;
  s.key = text.substr(0, eq);
  std::stringstream list(text.substr(eq + 1));
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) throw ck::ValidationError("--series has an empty entry");
    if (s.key == "atom" || s.key == "material") {
      s.names.push_back(item);
      continue;
    }
    const auto v = ck::parse_variable(s.key);
    double x = 0;
    try {
      std::size_t used = 0;
      x = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ck::ValidationError("--series value '" + item + "' is not a number");
    }
    s.values.push_back(to_si(v, x));
  }
  return s;
}

ck::PlotSpec plot_for(const ck::SweepConfig& c) {
  ck::PlotSpec p;
  p.title = c.scenario;
  p.x = c.axes.at(0).variable;
  p.log_x = c.axes[0].spacing == ck::Spacing::log;
  if (c.axes.size() == 2) {
    p.kind = ck::PlotKind::contour;
    p.y = c.axes[1].variable;
    p.log_y = c.axes[1].spacing == ck::Spacing::log;
  }
  return p;
}

int emit_sweep(const ck::SweepConfig& c, const ck::PlotSpec& plot) {
  c.validate();
  const auto result = ck::run_sweep(c);
  write_text(c.output.path, ck::rows_to_text(result.rows, c.output.format));
  if (!c.output.svg_path.empty()) write_text(c.output.svg_path, ck::render_svg(result.rows, plot));
  if (result.flagged > 0) {
    std::cerr << "casimir-knob: " << result.flagged << " of " << result.rows.size()
              << " rows flagged (see the warnings column)\n";
    return kExitPartial;
  }
  return kExitOk;
}

std::string single_row(const std::vector<std::pair<std::string, std::string>>& fields,
                       ck::OutputFormat format) {
  std::string out;
  if (format == ck::OutputFormat::csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i].first;
    out += "\r\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out += (i ? "," : "") + ck::csv_field(fields[i].second);
    }
    out += "\r\n";
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& [k, v] = fields[i];
    const bool numeric = !v.empty() && (std::isdigit(static_cast<unsigned char>(v[0])) ||
                                        v[0] == '-' || v[0] == '+');
    out += (i ? ", " : "") + ("\"" + k + "\": ") + (numeric ? v : "\"" + v + "\"");
  }
  return out + "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"casimir-knob: field-tuned atom/nanosphere force balance"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "casimir-knob 0.3.0");

  CommonArgs theta_args, field_args, dist_args, contour_args, crit_args, cross_args, fig_args;
  AxisArgs theta_axis, field_axis, dist_axis, cx_axis, cy_axis;
  std::string theta_series, field_series, dist_series;

  auto* theta = app.add_subcommand("gamma-theta", "Gamma against field angle theta0 (degrees)");
  add_common(theta, theta_args);
  add_axis(theta, theta_axis, "", "deg");
  theta->add_option("--series", theta_series, "Curve family VAR=v1,v2,...");

  auto* field = app.add_subcommand("gamma-field", "Gamma against field intensity E0 (V/m)");
  add_common(field, field_args);
  add_axis(field, field_axis, "", "V/m");
  field->add_option("--series", field_series, "Curve family VAR=v1,v2,...");

  auto* dist = app.add_subcommand("gamma-distance", "Gamma against surface gap a (nm)");
  add_common(dist, dist_args);
  add_axis(dist, dist_axis, "", "nm");
  dist->add_option("--series", dist_series, "Curve family VAR=v1,v2,...");

  auto* contour = app.add_subcommand("contour", "Gamma over a 2-D grid of two of theta0, E0, a");
  add_common(contour, contour_args);
  std::string x_var = "a", y_var = "E0";
  auto* o_xvar = contour->add_option("--x-axis", x_var, "theta0|E0|a (default a)");
  auto* o_yvar = contour->add_option("--y-axis", y_var, "theta0|E0|a (default E0)");
  add_axis(contour, cx_axis, "x-", "axis units");
  add_axis(contour, cy_axis, "y-", "axis units");

  auto* crit = app.add_subcommand("critical-field", "Field E0 at which gamma = 0");
  add_common(crit, crit_args);

  auto* cross = app.add_subcommand("crossing-distance", "Gap a at which gamma = 0");
  add_common(cross, cross_args);
  double lo_nm = 100, hi_nm = 2000, tol_rel = 1e-6;
  cross->add_option("--lo-nm", lo_nm, "Bracket start (nm)");
  cross->add_option("--hi-nm", hi_nm, "Bracket end (nm)");
  cross->add_option("--tol-rel", tol_rel, "Relative tolerance on a");

  auto* fig = app.add_subcommand("figure", "Regenerate a preset figure (2..8)");
  add_common(fig, fig_args);
  int fig_id = 0;
  fig->add_option("id", fig_id, "Figure number 2..8")->required();
  std::string fig_dir = ".";
  fig->add_option("--out-dir", fig_dir, "Directory for fig<N><panel>.{csv,json,svg}");

  auto* cat = app.add_subcommand("catalog", "Print the atom and material catalog as JSON");
  std::string cat_out;
  cat->add_option("--out", cat_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    auto one_d = [](CommonArgs& args, const AxisArgs& ax, const std::string& series,
                    ck::SweepVariable v, const char* scenario) {
      auto c = resolve_config(args);
      if (args.config.empty()) c.scenario = scenario;
      if (c.axes.empty() || ax.given()) {
        const bool reuse = c.axes.size() == 1 && c.axes[0].variable == v;
        c.axes = {merge_axis(reuse ? c.axes[0] : default_axis(v), ax)};
      }
      if (c.axes.size() != 1 || c.axes[0].variable != v) {
        throw ck::ValidationError("config axes do not match this subcommand's sweep variable");
      }
      if (!series.empty()) c.series = parse_series(series);
      return emit_sweep(c, plot_for(c));
    };

    if (*theta) return one_d(theta_args, theta_axis, theta_series, ck::SweepVariable::theta0, "gamma-theta");
    if (*field) return one_d(field_args, field_axis, field_series, ck::SweepVariable::field, "gamma-field");
    if (*dist) return one_d(dist_args, dist_axis, dist_series, ck::SweepVariable::gap, "gamma-distance");

    if (*contour) {
      auto c = resolve_config(contour_args);
      if (contour_args.config.empty()) c.scenario = "contour";
      const bool cli_axes = *o_xvar || *o_yvar || cx_axis.given() || cy_axis.given();
      if (c.axes.size() != 2 || cli_axes) {
        const auto xv = ck::parse_variable(x_var);
        const auto yv = ck::parse_variable(y_var);
        auto pick = [&c](ck::SweepVariable v, std::size_t i) {
          return c.axes.size() == 2 && c.axes[i].variable == v ? c.axes[i] : default_axis(v);
        };
        ck::SweepAxis ya = pick(yv, 1);
        if (yv == ck::SweepVariable::field && !(c.axes.size() == 2 && c.axes[1].variable == yv)) {
          ya.spacing = ck::Spacing::log;
          ya.points = 41;
        }
        c.axes = {merge_axis(pick(xv, 0), cx_axis), merge_axis(ya, cy_axis)};
      }
      c.series.reset();
      return emit_sweep(c, plot_for(c));
    }

    if (*crit) {
      const auto c = resolve_config(crit_args);
      const auto& atom = ck::find_atom(c.atom);
      const auto& material = ck::find_material(c.material);
      const auto geom = ck::Geometry::make(c.radius, c.gap);
      const double ec = ck::critical_field(atom, material, geom, c.theta0, c.method, c.quadrature);
      const auto method = ck::resolve_method(c.method.kind, atom, geom);
      write_text(c.output.path,
                 single_row({{"atom", atom.name()},
                             {"material", material.name()},
                             {"R_m", ck::format_number(c.radius)},
                             {"a_m", ck::format_number(c.gap)},
                             {"z_a_m", ck::format_number(geom.center_distance())},
                             {"theta0_rad", ck::format_number(c.theta0)},
                             {"method", std::string(ck::method_name(method))},
                             {"E_c_V_per_m", ck::format_number(ec)}},
                            c.output.format));
      return kExitOk;
    }

    if (*cross) {
      const auto c = resolve_config(cross_args);
      const auto& atom = ck::find_atom(c.atom);
      const auto& material = ck::find_material(c.material);
      const auto fc = ck::FieldConfig::make(c.field, c.theta0);
      const double a = ck::crossing_distance(atom, material, c.radius, fc, c.method,
                                             {lo_nm / kNmPerM, hi_nm / kNmPerM, tol_rel}, c.quadrature);
      write_text(c.output.path,
                 single_row({{"atom", atom.name()},
                             {"material", material.name()},
                             {"R_m", ck::format_number(c.radius)},
                             {"theta0_rad", ck::format_number(c.theta0)},
                             {"E0_V_per_m", ck::format_number(c.field)},
                             {"method", std::string(ck::method_name(c.method.kind))},
                             {"a_cross_m", ck::format_number(a)},
                             {"z_a_cross_m", ck::format_number(c.radius + a)}},
                            c.output.format));
      return kExitOk;
    }

    if (*fig) {
      const auto preset = ck::figure_preset(fig_id);
      const auto overrides = resolve_config(fig_args);
      std::filesystem::create_directories(fig_dir);
      int status = kExitOk;
      for (const auto& panel : preset.panels) {
        auto c = panel.config;
        c.workers = overrides.workers;
        if (*fig_args.o_rel) c.quadrature.rel_tol = overrides.quadrature.rel_tol;
        if (*fig_args.o_format) c.output.format = overrides.output.format;
        const std::string stem =
            (std::filesystem::path(fig_dir) / ("fig" + std::to_string(fig_id) + panel.label))
                .string();
        c.output.path = stem + (c.output.format == ck::OutputFormat::csv ? ".csv" : ".json");
        c.output.svg_path = stem + ".svg";
        if (emit_sweep(c, panel.plot) == kExitPartial) status = kExitPartial;
        std::cerr << "casimir-knob: wrote " << c.output.path << " and " << c.output.svg_path << "\n";
      }
      return status;
    }

    if (*cat) {
      write_text(cat_out, ck::catalog_json(2) + "\n");
      return kExitOk;
    }
  } catch (const ck::NoCrossoverError& e) {
    std::cerr << "casimir-knob: no crossover: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ck::BracketError& e) {
    std::cerr << "casimir-knob: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ck::ValidationError& e) {
    std::cerr << "casimir-knob: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ck::DomainError& e) {
    std::cerr << "casimir-knob: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "casimir-knob: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "casimir-knob: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
