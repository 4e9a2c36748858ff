#pragma once

#include <string>
#include <vector>

#include "casimir_knob/svg.hpp"
#include "casimir_knob/sweep.hpp"

namespace casimir_knob {

struct FigurePanel {
  std::string label;  // "a", "b" or empty for single-panel figures
  SweepConfig config;
  PlotSpec plot;
};

struct FigurePreset {
  int id = 0;
  std::string title;
  std::vector<FigurePanel> panels;
};

inline constexpr int kFirstFigure = 2;
inline constexpr int kLastFigure = 8;

// Sweep parameterization of the preset figures 2..8, R = 60 nm throughout.
// Throws std::out_of_range for other ids.
FigurePreset figure_preset(int id);

}  // namespace casimir_knob
