#include "casimir_knob/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "casimir_knob/contour.hpp"
#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

double variable_value(const SweepRow& r, SweepVariable v) {
  switch (v) {
    case SweepVariable::theta0: return r.theta0;
    case SweepVariable::field: return r.field;
    case SweepVariable::gap: return r.gap * 1e9;  // nm
  }
  return 0.0;
}

std::string axis_label(SweepVariable v) {
  switch (v) {
    case SweepVariable::theta0: return "θ₀ (rad)";
    case SweepVariable::field: return "E₀ (V/m)";
    case SweepVariable::gap: return "a (nm)";
  }
  return "";
}

// Maps data values onto a pixel interval, optionally in log space.
struct Scale {
  double lo;
  double hi;
  double p0;
  double p1;
  bool log;

  double t(double v) const { return log ? std::log10(v) : v; }
  double operator()(double v) const {
    const double a = t(lo);
    const double b = t(hi);
    return p0 + (t(v) - a) / (b - a) * (p1 - p0);
  }
};

std::vector<double> ticks(double lo, double hi, bool log) {
  std::vector<double> out;
  if (log) {
    for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)); e += 1.0) {
      const double v = std::pow(10.0, e);
      if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) out.push_back(v);
    }
    if (out.size() >= 2) return out;
    out.clear();
  }
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (raw <= step) break;
  }
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) {
    out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return out;
}

struct Frame {
  double left, top, right, bottom;
};

void draw_axes(std::string& svg, const Frame& f, const Scale& sx, const Scale& sy,
               const std::string& xlabel, const std::string& ylabel, const std::string& title) {
  svg += "<rect x=\"" + px(f.left) + "\" y=\"" + px(f.top) + "\" width=\"" + px(f.right - f.left) +
         "\" height=\"" + px(f.bottom - f.top) + "\" fill=\"none\" stroke=\"#000\"/>\n";
  for (double v : ticks(sx.lo, sx.hi, sx.log)) {
    const double x = sx(v);
    svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(f.bottom) + "\" x2=\"" + px(x) + "\" y2=\"" +
           px(f.bottom + 5) + "\" stroke=\"#000\"/>\n";
    svg += "<text x=\"" + px(x) + "\" y=\"" + px(f.bottom + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + fmt("%g", v) + "</text>\n";
  }
  for (double v : ticks(sy.lo, sy.hi, sy.log)) {
    const double y = sy(v);
    svg += "<line x1=\"" + px(f.left - 5) + "\" y1=\"" + px(y) + "\" x2=\"" + px(f.left) +
           "\" y2=\"" + px(y) + "\" stroke=\"#000\"/>\n";
    svg += "<text x=\"" + px(f.left - 8) + "\" y=\"" + px(y + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fmt("%g", v) + "</text>\n";
  }
  svg += "<text x=\"" + px(0.5 * (f.left + f.right)) + "\" y=\"" + px(f.bottom + 42) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + escape(xlabel) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + px(0.5 * (f.top + f.bottom)) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         px(0.5 * (f.top + f.bottom)) + ")\">" + escape(ylabel) + "</text>\n";
  if (!title.empty()) {
    svg += "<text x=\"" + px(0.5 * (f.left + f.right)) + "\" y=\"" + px(f.top - 14) +
           "\" font-size=\"14\" text-anchor=\"middle\">" + escape(title) + "</text>\n";
  }
}

std::string header(const PlotSpec& spec) {
  const std::string w = std::to_string(spec.width);
  const std::string h = std::to_string(spec.height);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h +
         "\" font-family=\"sans-serif\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
}

// Diverging blue-white-red map of gamma / (1 + |gamma|).
std::string color_for(double gamma) {
  if (!std::isfinite(gamma)) return "#bbbbbb";
  const double t = gamma / (1.0 + std::abs(gamma));
  const double s = std::abs(t);
  const double r0 = t < 0 ? 33 : 178, g0 = t < 0 ? 102 : 24, b0 = t < 0 ? 172 : 43;
  auto mix = [s](double c) { return static_cast<int>(std::lround(255.0 + (c - 255.0) * s)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(r0), mix(g0), mix(b0));
  return buf;
}

double check_range(double lo, double hi, bool log, const char* which) {
  if (log && !(lo > 0.0)) {
    throw DomainError(std::string("render_svg: log ") + which + " axis needs positive values");
  }
  return hi - lo;
}

std::string render_line(std::span<const SweepRow> rows, const PlotSpec& spec) {
  std::map<std::size_t, std::vector<const SweepRow*>> series;
  for (const auto& r : rows) series[r.series].push_back(&r);

  const SweepVariable all[] = {SweepVariable::theta0, SweepVariable::field, SweepVariable::gap};
  for (const auto& [_, members] : series) {
    for (auto v : all) {
      if (v == spec.x) continue;
      const double first = variable_value(*members.front(), v);
      for (const auto* r : members) {
        if (variable_value(*r, v) != first) {
          throw DomainError("render_svg: line plot over '" + std::string(variable_name(spec.x)) +
                            "' but '" + std::string(variable_name(v)) +
                            "' also varies within a series (dimension mismatch)");
        }
      }
    }
  }

  double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
  for (const auto& r : rows) {
    xlo = std::min(xlo, variable_value(r, spec.x));
    xhi = std::max(xhi, variable_value(r, spec.x));
    if (std::isfinite(r.gamma)) {
      ylo = std::min(ylo, r.gamma);
      yhi = std::max(yhi, r.gamma);
    }
  }
  if (!(xhi > xlo)) throw DomainError("render_svg: x values do not span a range");
  check_range(xlo, xhi, spec.log_x, "x");
  if (!std::isfinite(ylo)) ylo = -1.0, yhi = 1.0;
  if (yhi - ylo <= 0.0) ylo -= 1.0, yhi += 1.0;
  const double pad = 0.05 * (yhi - ylo);
  ylo -= pad;
  yhi += pad;

  const Frame f{80.0, 40.0, spec.width - 170.0, spec.height - 60.0};
  const Scale sx{xlo, xhi, f.left, f.right, spec.log_x};
  const Scale sy{ylo, yhi, f.bottom, f.top, false};

  std::string svg = header(spec);
  draw_axes(svg, f, sx, sy, axis_label(spec.x), "Γ", spec.title);
  if (ylo < 0.0 && yhi > 0.0) {
    svg += "<line x1=\"" + px(f.left) + "\" y1=\"" + px(sy(0.0)) + "\" x2=\"" + px(f.right) +
           "\" y2=\"" + px(sy(0.0)) + "\" stroke=\"#888\" stroke-dasharray=\"4,3\"/>\n";
  }
  std::size_t k = 0;
  for (const auto& [_, members] : series) {
    const char* color = kPalette[k % std::size(kPalette)];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.6\" points=\"";
    bool first = true;
    for (const auto* r : members) {
      if (!std::isfinite(r->gamma)) continue;
      if (!first) svg += ' ';
      svg += px(sx(variable_value(*r, spec.x))) + "," + px(sy(r->gamma));
      first = false;
    }
    svg += "\"/>\n";
    const std::string label = members.front()->series_label.empty()
                                  ? members.front()->atom + " / " + members.front()->material
                                  : members.front()->series_label;
    const double ly = f.top + 10.0 + 18.0 * static_cast<double>(k);
    svg += "<line x1=\"" + px(f.right + 12) + "\" y1=\"" + px(ly) + "\" x2=\"" + px(f.right + 32) +
           "\" y2=\"" + px(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + px(f.right + 38) + "\" y=\"" + px(ly + 4) + "\" font-size=\"11\">" +
           escape(label) + "</text>\n";
    ++k;
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_contour(std::span<const SweepRow> rows, const PlotSpec& spec) {
  if (spec.x == spec.y) throw DomainError("render_svg: contour needs two distinct variables");
  std::set<double> xset, yset;
  std::set<std::size_t> series;
  for (const auto& r : rows) {
    xset.insert(variable_value(r, spec.x));
    yset.insert(variable_value(r, spec.y));
    series.insert(r.series);
  }
  if (series.size() != 1) throw DomainError("render_svg: contour plots take a single series");
  if (xset.size() < 2 || yset.size() < 2 || xset.size() * yset.size() != rows.size()) {
    throw DomainError("render_svg: rows do not form a complete 2-D grid (dimension mismatch)");
  }
  const std::vector<double> xs(xset.begin(), xset.end());
  const std::vector<double> ys(yset.begin(), yset.end());
  check_range(xs.front(), xs.back(), spec.log_x, "x");
  check_range(ys.front(), ys.back(), spec.log_y, "y");

  std::vector<double> gamma(xs.size() * ys.size(), std::nan(""));
  std::vector<bool> filled(gamma.size(), false);
  for (const auto& r : rows) {
    const auto i = static_cast<std::size_t>(
        std::lower_bound(xs.begin(), xs.end(), variable_value(r, spec.x)) - xs.begin());
    const auto j = static_cast<std::size_t>(
        std::lower_bound(ys.begin(), ys.end(), variable_value(r, spec.y)) - ys.begin());
    if (filled[j * xs.size() + i]) throw DomainError("render_svg: duplicate grid point");
    filled[j * xs.size() + i] = true;
    gamma[j * xs.size() + i] = r.gamma;
  }

  const Frame f{90.0, 40.0, spec.width - 150.0, spec.height - 60.0};
  const Scale sx{xs.front(), xs.back(), f.left, f.right, spec.log_x};
  const Scale sy{ys.front(), ys.back(), f.bottom, f.top, spec.log_y};

  std::string svg = header(spec);
  for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const std::size_t n = xs.size();
      const double avg = 0.25 * (gamma[j * n + i] + gamma[j * n + i + 1] +
                                 gamma[(j + 1) * n + i] + gamma[(j + 1) * n + i + 1]);
      const double x0 = sx(xs[i]), x1 = sx(xs[i + 1]);
      const double y0 = sy(ys[j + 1]), y1 = sy(ys[j]);
      svg += "<rect x=\"" + px(x0) + "\" y=\"" + px(y0) + "\" width=\"" + px(x1 - x0 + 0.3) +
             "\" height=\"" + px(y1 - y0 + 0.3) + "\" fill=\"" + color_for(avg) + "\"/>\n";
    }
  }

  bool any_negative = false, any_nonnegative = false;
  for (double g : gamma) {
    if (!std::isfinite(g)) continue;
    (g < 0.0 ? any_negative : any_nonnegative) = true;
  }

  // Contour in pixel space so log axes interpolate the way they are drawn.
  Grid2D grid;
  for (double x : xs) grid.xs.push_back(sx(x));
  for (double y : ys) grid.ys.push_back(sy(y));
  grid.values = gamma;
  const auto lines = marching_squares(grid, 0.0);
  for (const auto& line : lines) {
    svg += "<polyline class=\"zero-contour\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\" "
           "stroke-dasharray=\"6,4\" points=\"";
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) svg += ' ';
      svg += px(line[k].x) + "," + px(line[k].y);
    }
    svg += "\"/>\n";
  }

  draw_axes(svg, f, sx, sy, axis_label(spec.x), axis_label(spec.y), spec.title);

  // Colour bar over gamma / (1 + |gamma|).
  const double bx = f.right + 20.0;
  const double bh = f.bottom - f.top;
  constexpr int kSteps = 40;
  for (int s = 0; s < kSteps; ++s) {
    const double t = 1.0 - 2.0 * (s + 0.5) / kSteps;
    const double g = t / (1.0 - std::abs(t));
    svg += "<rect x=\"" + px(bx) + "\" y=\"" + px(f.top + bh * s / kSteps) +
           "\" width=\"16\" height=\"" + px(bh / kSteps + 0.3) + "\" fill=\"" + color_for(g) +
           "\"/>\n";
  }
  for (double g : {-9.0, -1.0, 0.0, 1.0, 9.0}) {
    const double t = g / (1.0 + std::abs(g));
    const double y = f.top + bh * (1.0 - t) / 2.0;
    svg += "<text x=\"" + px(bx + 22) + "\" y=\"" + px(y + 4) + "\" font-size=\"10\">" +
           fmt("%g", g) + "</text>\n";
  }
  svg += "<text x=\"" + px(bx) + "\" y=\"" + px(f.top - 8) + "\" font-size=\"12\">Γ</text>\n";

  std::string legend;
  if (!lines.empty()) {
    legend = "dashed: Γ = 0";
  } else if (!any_nonnegative) {
    legend = "attractive everywhere";
  } else if (!any_negative) {
    legend = "repulsive everywhere";
  }
  if (!legend.empty()) {
    svg += "<text class=\"legend\" x=\"" + px(f.left) + "\" y=\"" + px(spec.height - 8.0) +
           "\" font-size=\"11\">" + escape(legend) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_svg(std::span<const SweepRow> rows, const PlotSpec& spec) {
  if (rows.empty()) throw DomainError("render_svg: no rows to plot");
  if (spec.width < 300 || spec.height < 200) throw DomainError("render_svg: canvas too small");
  return spec.kind == PlotKind::line ? render_line(rows, spec) : render_contour(rows, spec);
}

}  // namespace casimir_knob
