#include "casimir_knob/sweep_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kColumns[] = {"scenario", "atom",       "material",   "R_m",
                                    "a_m",      "z_a_m",      "theta0_rad", "E0_V_per_m",
                                    "method",   "F_disp_N",   "F_el_N",     "F_net_N",
                                    "gamma",    "warnings"};

std::string join_warnings(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& code : w) {
    if (!out.empty()) out += ';';
    out += code;
  }
  return out;
}

[[noreturn]] void invalid(const std::string& msg) { throw ValidationError("config: " + msg); }

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) invalid(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) invalid("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    invalid("'" + std::string(key) + "' in " + where + " has the wrong type");
  }
}

template <typename T>
void read(const json& obj, const char* key, T& dest, const std::string& where) {
  if (obj.contains(key)) dest = get<T>(obj, key, where);
}

SweepAxis parse_axis(const json& a) {
  check_keys(a, {"variable", "min", "max", "points", "spacing"}, "axes[]");
  SweepAxis axis;
  axis.variable = parse_variable(get<std::string>(a, "variable", "axes[]"));
  axis.min = get<double>(a, "min", "axes[]");
  axis.max = get<double>(a, "max", "axes[]");
  axis.points = get<int>(a, "points", "axes[]");
  const auto spacing = a.value("spacing", std::string("linear"));
  if (spacing == "linear") {
    axis.spacing = Spacing::linear;
  } else if (spacing == "log") {
    axis.spacing = Spacing::log;
  } else {
    invalid("axis spacing must be 'linear' or 'log'");
  }
  return axis;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string rows_to_csv(std::span<const SweepRow> rows) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  out += "\r\n";
  for (const auto& r : rows) {
    const std::string fields[] = {
        csv_field(r.scenario),          csv_field(r.atom),
        csv_field(r.material),          format_number(r.radius),
        format_number(r.gap),           format_number(r.center_distance),
        format_number(r.theta0),        format_number(r.field),
        std::string(method_name(r.method)), format_number(r.f_disp),
        format_number(r.f_el),          format_number(r.f_net),
        format_number(r.gamma),         csv_field(join_warnings(r.warnings))};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += "\r\n";
  }
  return out;
}

std::string rows_to_json(std::span<const SweepRow> rows) {
  // nlohmann emits the shortest round-trip form, matching the CSV digits.
  auto num = [](double v) -> ordered_json {
    if (!std::isfinite(v)) return nullptr;
    return v;
  };
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({
        {"scenario", r.scenario},
        {"atom", r.atom},
        {"material", r.material},
        {"R_m", num(r.radius)},
        {"a_m", num(r.gap)},
        {"z_a_m", num(r.center_distance)},
        {"theta0_rad", num(r.theta0)},
        {"E0_V_per_m", num(r.field)},
        {"method", std::string(method_name(r.method))},
        {"F_disp_N", num(r.f_disp)},
        {"F_el_N", num(r.f_el)},
        {"F_net_N", num(r.f_net)},
        {"gamma", num(r.gamma)},
        {"warnings", r.warnings},
    });
  }
  return arr.dump(2) + "\n";
}

std::string rows_to_text(std::span<const SweepRow> rows, OutputFormat format) {
  return format == OutputFormat::csv ? rows_to_csv(rows) : rows_to_json(rows);
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ValidationError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

SweepConfig config_from_json(std::string_view text, const SweepConfig& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  check_keys(doc,
             {"schema_version", "scenario", "atom", "material", "R_m", "a_m", "theta0_rad",
              "E0_V_per_m", "axes", "series", "method", "electrostatics", "quadrature", "workers",
              "output"},
             "config");
  if (!doc.contains("schema_version")) invalid("missing schema_version");
  if (const int version = get<int>(doc, "schema_version", "config"); version != kConfigSchemaVersion) {
    invalid("unsupported schema_version " + std::to_string(version));
  }

  SweepConfig cfg = base;
  read(doc, "scenario", cfg.scenario, "config");
  read(doc, "atom", cfg.atom, "config");
  read(doc, "material", cfg.material, "config");
  read(doc, "R_m", cfg.radius, "config");
  read(doc, "a_m", cfg.gap, "config");
  read(doc, "theta0_rad", cfg.theta0, "config");
  read(doc, "E0_V_per_m", cfg.field, "config");
  read(doc, "workers", cfg.workers, "config");

  if (doc.contains("axes")) {
    if (!doc["axes"].is_array()) invalid("axes must be an array");
    cfg.axes.clear();
    for (const auto& a : doc["axes"]) cfg.axes.push_back(parse_axis(a));
  }

  if (doc.contains("series")) {
    const auto& s = doc["series"];
    if (s.is_null()) {
      cfg.series.reset();
    } else {
      check_keys(s, {"variable", "values"}, "series");
      SeriesSpec spec;
      spec.key = get<std::string>(s, "variable", "series");
      if (spec.key == "atom" || spec.key == "material") {
        spec.names = get<std::vector<std::string>>(s, "values", "series");
      } else {
        spec.values = get<std::vector<double>>(s, "values", "series");
      }
      cfg.series = std::move(spec);
    }
  }

  if (doc.contains("method")) {
    const auto& m = doc["method"];
    check_keys(m, {"name", "lmax", "tail_tol"}, "method");
    if (m.contains("name")) cfg.method.kind = parse_method(get<std::string>(m, "name", "method"));
    read(m, "lmax", cfg.method.multipole.l_max, "method");
    if (m.contains("tail_tol")) {
      if (m["tail_tol"].is_null()) {
        cfg.method.multipole.tail_tol.reset();
      } else {
        cfg.method.multipole.tail_tol = get<double>(m, "tail_tol", "method");
      }
    }
  }

  if (doc.contains("electrostatics")) {
    const auto e = get<std::string>(doc, "electrostatics", "config");
    if (e == "full") {
      cfg.electrostatics = ElectrostaticModel::full;
    } else if (e == "small-sphere") {
      cfg.electrostatics = ElectrostaticModel::small_sphere;
    } else {
      invalid("electrostatics must be 'full' or 'small-sphere'");
    }
  }

  if (doc.contains("quadrature")) {
    const auto& q = doc["quadrature"];
    check_keys(q, {"rel_tol", "abs_floor", "max_refinements"}, "quadrature");
    read(q, "rel_tol", cfg.quadrature.rel_tol, "quadrature");
    read(q, "abs_floor", cfg.quadrature.abs_floor, "quadrature");
    read(q, "max_refinements", cfg.quadrature.max_refinements, "quadrature");
  }

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    check_keys(o, {"path", "format", "svg"}, "output");
    read(o, "path", cfg.output.path, "output");
    read(o, "svg", cfg.output.svg_path, "output");
    if (o.contains("format")) cfg.output.format = parse_format(get<std::string>(o, "format", "output"));
  }
  return cfg;
}

SweepConfig load_config(const std::string& path, const SweepConfig& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str(), base);
}

std::string config_to_json(const SweepConfig& cfg, int indent) {
  ordered_json doc;
  doc["schema_version"] = kConfigSchemaVersion;
  doc["scenario"] = cfg.scenario;
  doc["atom"] = cfg.atom;
  doc["material"] = cfg.material;
  doc["R_m"] = cfg.radius;
  doc["a_m"] = cfg.gap;
  doc["theta0_rad"] = cfg.theta0;
  doc["E0_V_per_m"] = cfg.field;
  ordered_json axes = ordered_json::array();
  for (const auto& a : cfg.axes) {
    axes.push_back({{"variable", std::string(variable_name(a.variable))},
                    {"min", a.min},
                    {"max", a.max},
                    {"points", a.points},
                    {"spacing", a.spacing == Spacing::log ? "log" : "linear"}});
  }
  doc["axes"] = std::move(axes);
  if (cfg.series) {
    ordered_json s = {{"variable", cfg.series->key}};
    if (cfg.series->names.empty()) {
      s["values"] = cfg.series->values;
    } else {
      s["values"] = cfg.series->names;
    }
    doc["series"] = std::move(s);
  }
  ordered_json method = {{"name", std::string(method_name(cfg.method.kind))},
                         {"lmax", cfg.method.multipole.l_max}};
  if (cfg.method.multipole.tail_tol) {
    method["tail_tol"] = *cfg.method.multipole.tail_tol;
  } else {
    method["tail_tol"] = nullptr;
  }
  doc["method"] = std::move(method);
  doc["electrostatics"] = cfg.electrostatics == ElectrostaticModel::full ? "full" : "small-sphere";
  doc["quadrature"] = {{"rel_tol", cfg.quadrature.rel_tol},
                       {"abs_floor", cfg.quadrature.abs_floor},
                       {"max_refinements", cfg.quadrature.max_refinements}};
  doc["workers"] = cfg.workers;
  doc["output"] = {{"path", cfg.output.path},
                   {"format", cfg.output.format == OutputFormat::csv ? "csv" : "json"},
                   {"svg", cfg.output.svg_path}};
  return doc.dump(indent);
}

}  // namespace casimir_knob
