#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir_knob/analysis.hpp"

namespace casimir_knob {

enum class SweepVariable { theta0, field, gap };
enum class Spacing { linear, log };

// Config spelling: "theta0", "E0", "a".
std::string_view variable_name(SweepVariable v);
SweepVariable parse_variable(std::string_view name);

struct SweepAxis {
  SweepVariable variable = SweepVariable::gap;
  double min = 0.0;  // SI: rad, V/m or m
  double max = 0.0;
  int points = 2;
  Spacing spacing = Spacing::linear;

  // Grid values, first == min and last == max exactly.
  std::vector<double> values() const;
};

// Family of curves: one sub-sweep per entry. Key is "atom", "material" or a
// sweep variable name; numeric keys use `values`, catalog keys use `names`.
struct SeriesSpec {
  std::string key;
  std::vector<std::string> names;
  std::vector<double> values;

  std::size_t size() const { return names.empty() ? values.size() : names.size(); }
};

enum class OutputFormat { csv, json };

struct OutputSpec {
  std::string path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  std::string svg_path;
};

struct SweepConfig {
  std::string scenario = "sweep";
  std::string atom = "H";
  std::string material = "Au";
  double radius = 60e-9;    // m
  double gap = 700e-9;      // m
  double theta0 = kPi / 2;  // rad
  double field = 1e5;       // V/m
  std::vector<SweepAxis> axes;
  std::optional<SeriesSpec> series;
  DispersionMethod method{};
  QuadratureSpec quadrature{};
  ElectrostaticModel electrostatics = ElectrostaticModel::full;
  int workers = 1;  // 0: hardware concurrency
  OutputSpec output{};

  // Throws ValidationError on any inconsistency (unknown catalog names,
  // points < 2, min >= max, duplicate axes, method incompatible with atom...).
  void validate() const;
};

struct SweepRow {
  std::string scenario;
  std::string atom;
  std::string material;
  double radius = 0.0;
  double gap = 0.0;
  double center_distance = 0.0;
  double theta0 = 0.0;
  double field = 0.0;
  MethodKind method = MethodKind::dipole_full;
  double f_disp = 0.0;
  double f_el = 0.0;
  double f_net = 0.0;
  double gamma = 0.0;
  std::vector<std::string> warnings;
  bool flagged = false;      // non-converged or failed point
  std::size_t series = 0;    // index into the config's series, 0 if none
  std::string series_label;  // e.g. "Cs" or "E0=60000 V/m"
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t flagged = 0;
};

// Evaluates force_breakdown on every grid point. Row order is series-major,
// then row-major over the axes (first axis slowest), independent of the
// number of workers.
SweepResult run_sweep(const SweepConfig& config);

// Worker count from CASIMIR_KNOB_WORKERS, else hardware concurrency (>= 1).
int default_workers();

}  // namespace casimir_knob
