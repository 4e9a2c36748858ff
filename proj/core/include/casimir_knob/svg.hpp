#pragma once

#include <span>
#include <string>

#include "casimir_knob/sweep.hpp"

namespace casimir_knob {

enum class PlotKind {
  line,     // gamma against x, one polyline per series
  contour,  // gamma over (x, y), single series
};

struct PlotSpec {
  PlotKind kind = PlotKind::line;
  SweepVariable x = SweepVariable::gap;
  SweepVariable y = SweepVariable::field;  // contour only
  std::string title;
  bool log_x = false;
  bool log_y = false;
  int width = 720;
  int height = 480;
};

// Self-contained SVG 1.1 document. Lengths are shown in nm, fields in V/m,
// angles in rad. Contour plots draw the gamma = 0 level dashed, or note
// "attractive everywhere" / "repulsive everywhere" when gamma keeps one sign.
// Throws DomainError when the rows do not have the shape the plot kind needs.
std::string render_svg(std::span<const SweepRow> rows, const PlotSpec& spec);

}  // namespace casimir_knob
