#include "casimir_knob/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

#include "casimir_knob/catalog.hpp"
#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

bool is_numeric_key(std::string_view key) { return key == "theta0" || key == "E0" || key == "a"; }

std::string numeric_label(std::string_view key, double v) {
  std::ostringstream s;
  s.precision(6);
  if (key == "a") {
    s << "a=" << v * 1e9 << " nm";
  } else if (key == "E0") {
    s << "E0=" << v << " V/m";
  } else {
    s << "theta0=" << v << " rad";
  }
  return s.str();
}

// One fully resolved evaluation point.
struct Point {
  std::size_t series = 0;
  std::string label;
  std::string atom;
  std::string material;
  double gap;
  double theta0;
  double field;
};

void set_variable(Point& p, SweepVariable v, double value) {
  switch (v) {
    case SweepVariable::theta0: p.theta0 = value; break;
    case SweepVariable::field: p.field = value; break;
    case SweepVariable::gap: p.gap = value; break;
  }
}

std::vector<Point> expand(const SweepConfig& cfg) {
  std::vector<Point> base;
  const std::size_t n_series = cfg.series ? cfg.series->size() : 1;
  for (std::size_t s = 0; s < n_series; ++s) {
    Point p{s, "", cfg.atom, cfg.material, cfg.gap, cfg.theta0, cfg.field};
    if (cfg.series) {
      const auto& sr = *cfg.series;
      if (sr.key == "atom") {
        p.atom = p.label = sr.names[s];
      } else if (sr.key == "material") {
        p.material = p.label = sr.names[s];
      } else {
        set_variable(p, parse_variable(sr.key), sr.values[s]);
        p.label = numeric_label(sr.key, sr.values[s]);
      }
    }
    base.push_back(std::move(p));
  }

  std::vector<Point> points;
  for (const auto& b : base) {
    if (cfg.axes.size() == 1) {
      for (double v : cfg.axes[0].values()) {
        Point p = b;
        set_variable(p, cfg.axes[0].variable, v);
        points.push_back(std::move(p));
      }
    } else {
      const auto outer = cfg.axes[0].values();
      const auto inner = cfg.axes[1].values();
      for (double u : outer) {
        for (double v : inner) {
          Point p = b;
          set_variable(p, cfg.axes[0].variable, u);
          set_variable(p, cfg.axes[1].variable, v);
          points.push_back(std::move(p));
        }
      }
    }
  }
  return points;
}

SweepRow evaluate(const SweepConfig& cfg, const Point& p) {
  SweepRow row;
  row.scenario = cfg.scenario;
  row.atom = p.atom;
  row.material = p.material;
  row.radius = cfg.radius;
  row.gap = p.gap;
  row.center_distance = cfg.radius + p.gap;
  row.series = p.series;
  row.series_label = p.label;
  row.method = cfg.method.kind;

  const auto field = FieldConfig::make(p.field, p.theta0);
  row.theta0 = p.theta0;  // as requested, before wrapping
  row.field = field.magnitude;
  try {
    ForceOptions opts;
    opts.method = cfg.method;
    opts.quadrature = cfg.quadrature;
    opts.electrostatics = cfg.electrostatics;
    const auto fb = force_breakdown(find_atom(p.atom), find_material(p.material),
                                    Geometry::make(cfg.radius, p.gap), field, opts);
    row.method = fb.method;
    row.f_disp = fb.f_disp;
    row.f_el = fb.f_el;
    row.f_net = fb.f_net;
    row.gamma = fb.gamma;
    row.warnings = fb.warnings;
    row.flagged = !fb.converged;
  } catch (const std::exception&) {
    row.f_disp = row.f_el = row.f_net = row.gamma = std::nan("");
    row.warnings.push_back("evaluation-error");
    row.flagged = true;
  }
  return row;
}

}  // namespace

std::string_view variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::theta0: return "theta0";
    case SweepVariable::field: return "E0";
    case SweepVariable::gap: return "a";
  }
  return "unknown";
}

SweepVariable parse_variable(std::string_view name) {
  if (name == "theta0") return SweepVariable::theta0;
  if (name == "E0") return SweepVariable::field;
  if (name == "a") return SweepVariable::gap;
  throw ValidationError("unknown sweep variable '" + std::string(name) +
                        "' (expected theta0, E0 or a)");
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  const int last = points - 1;
  for (int k = 0; k <= last; ++k) {
    const double t = static_cast<double>(k) / last;
    if (spacing == Spacing::log) {
      out[k] = min * std::pow(max / min, t);
    } else {
      out[k] = min + (max - min) * t;
    }
  }
  out.front() = min;
  out.back() = max;
  return out;
}

void SweepConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError("sweep config: " + msg); };

  find_atom(atom);
  find_material(material);
  if (!(radius > 0.0) || !std::isfinite(radius)) fail("R must be > 0");
  if (!std::isfinite(theta0)) fail("theta0 must be finite");
  if (!(field >= 0.0) || !std::isfinite(field)) fail("E0 must be >= 0");

  if (axes.empty() || axes.size() > 2) fail("expected 1 or 2 swept axes");
  std::set<SweepVariable> seen;
  for (const auto& ax : axes) {
    const std::string name(variable_name(ax.variable));
    if (!seen.insert(ax.variable).second) fail("axis '" + name + "' listed twice");
    if (ax.points < 2) fail("axis '" + name + "' needs at least 2 points");
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max)) fail("axis '" + name + "' bounds must be finite");
    if (!(ax.min < ax.max)) fail("axis '" + name + "' needs min < max");
    if (ax.spacing == Spacing::log && !(ax.min > 0.0)) fail("log axis '" + name + "' needs min > 0");
    if (ax.variable == SweepVariable::gap && !(ax.min > 0.0)) fail("axis 'a' needs min > 0");
    if (ax.variable == SweepVariable::field && !(ax.min >= 0.0)) fail("axis 'E0' needs min >= 0");
  }
  if (!seen.contains(SweepVariable::gap) && !(gap > 0.0)) fail("a must be > 0");

  std::vector<std::string> atoms{atom};
  if (series) {
    const auto& s = *series;
    if (s.key == "atom" || s.key == "material") {
      if (s.names.empty() || !s.values.empty()) fail("series '" + s.key + "' needs a list of names");
      for (const auto& n : s.names) {
        if (s.key == "atom") find_atom(n); else find_material(n);
      }
      if (s.key == "atom") atoms = s.names;
    } else if (is_numeric_key(s.key)) {
      if (s.values.empty() || !s.names.empty()) fail("series '" + s.key + "' needs numeric values");
      if (seen.contains(parse_variable(s.key))) fail("series variable '" + s.key + "' is also swept");
      for (double v : s.values) {
        if (!std::isfinite(v)) fail("series values must be finite");
        if (s.key == "a" && !(v > 0.0)) fail("series 'a' values must be > 0");
        if (s.key == "E0" && !(v >= 0.0)) fail("series 'E0' values must be >= 0");
      }
    } else {
      fail("unknown series key '" + s.key + "'");
    }
  }

  try {
    method.multipole.validate();
    QuadratureSpec q = quadrature;
    q.scale_hint = 1.0;
    q.validate();
  } catch (const DomainError& e) {
    fail(e.what());
  }
  if (method.kind == MethodKind::nonretarded_pc) {
    for (const auto& a : atoms) {
      if (!find_atom(a).single_oscillator()) {
        fail("method nonretarded-pc needs a single-oscillator atom; '" + a +
             "' has two oscillators (use dipole-full)");
      }
    }
  }
  if (workers < 0) fail("workers must be >= 0");
}

int default_workers() {
  if (const char* env = std::getenv("CASIMIR_KNOB_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(n);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const auto points = expand(config);

  SweepResult result;
  result.rows.resize(points.size());
  const std::size_t n_workers = std::clamp<std::size_t>(
      config.workers == 0 ? static_cast<std::size_t>(std::thread::hardware_concurrency())
                          : static_cast<std::size_t>(config.workers),
      1, std::max<std::size_t>(1, points.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      result.rows[i] = evaluate(config, points[i]);
    }
  };
  if (n_workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(work);
  }

  result.flagged = static_cast<std::size_t>(
      std::count_if(result.rows.begin(), result.rows.end(), [](const auto& r) { return r.flagged; }));
  return result;
}

}  // namespace casimir_knob
