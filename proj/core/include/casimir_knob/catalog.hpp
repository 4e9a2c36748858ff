#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casimir_knob/response.hpp"

namespace casimir_knob {

// Row of an oscillator table in its tabulated units.
struct OscillatorTableRow {
  double alpha_au;
  double omega_ev;
};

struct AtomEntry {
  OscillatorModel model;
  std::vector<OscillatorTableRow> table;
};

struct MaterialEntry {
  DielectricModel model;
  std::string description;
};

// Built-in atoms: H (single oscillator), Na, K, Fe, Rb, Cs (two oscillators).
const std::vector<AtomEntry>& atom_catalog();

// Built-in materials: Au (Drude), SiO2 (two-term Drude-Lorentz),
// PerfectConductor.
const std::vector<MaterialEntry>& material_catalog();

// Case-insensitive lookup, "PC" naming the perfect conductor; throws
// ValidationError listing the known names.
const OscillatorModel& find_atom(std::string_view name);
const DielectricModel& find_material(std::string_view name);

// Both catalogs as a JSON document with tabulated values, SI values and
// units.
std::string catalog_json(int indent = 2);

}  // namespace casimir_knob
