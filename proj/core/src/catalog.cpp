#include "casimir_knob/catalog.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

AtomEntry make_atom(std::string name, std::vector<OscillatorTableRow> rows) {
  std::vector<OscillatorTerm> terms;
  terms.reserve(rows.size());
  for (const auto& r : rows) {
    terms.push_back({au_to_si_polarizability(r.alpha_au), ev_to_angular(r.omega_ev)});
  }
  return AtomEntry{OscillatorModel(std::move(name), std::move(terms)), std::move(rows)};
}

std::vector<AtomEntry> build_atoms() {
  std::vector<AtomEntry> atoms;
  atoms.push_back(make_atom("H", {{4.5, 11.65}}));
  atoms.push_back(make_atom("Na", {{162.1, 2.12}, {0.547, 116.4}}));
  atoms.push_back(make_atom("K", {{288.4, 1.66}, {1.754, 87.0}}));
  atoms.push_back(make_atom("Fe", {{307.8, 1.75}, {9.972, 42.8}}));
  atoms.push_back(make_atom("Rb", {{316.7, 1.65}, {1.85, 119.6}}));
  atoms.push_back(make_atom("Cs", {{397.3, 1.53}, {2.597, 123.8}}));
  return atoms;
}

// Dielectric parameters are angular frequencies in rad/s.
std::vector<MaterialEntry> build_materials() {
  std::vector<MaterialEntry> materials;
  materials.push_back(
      {DielectricModel("Au", Drude{AngularFrequency{1.37e16}, AngularFrequency{4.05e13}}),
       "gold, Drude model"});
  materials.push_back(
      {DielectricModel("SiO2",
                       DrudeLorentz{{
                           {AngularFrequency{1.75e14}, AngularFrequency{1.32e14},
                            AngularFrequency{4.28e13}},
                           {AngularFrequency{2.96e16}, AngularFrequency{2.72e16},
                            AngularFrequency{8.09e15}},
                       }}),
       "silicon dioxide, two-term Drude-Lorentz model"});
  materials.push_back({DielectricModel("PerfectConductor", PerfectConductor{}),
                       "ideal conductor, eps -> infinity"});
  return materials;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

template <typename Entries>
std::string known_names(const Entries& entries) {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ", ";
    out += e.model.name();
  }
  return out;
}

}  // namespace

const std::vector<AtomEntry>& atom_catalog() {
  static const std::vector<AtomEntry> atoms = build_atoms();
  return atoms;
}

const std::vector<MaterialEntry>& material_catalog() {
  static const std::vector<MaterialEntry> materials = build_materials();
  return materials;
}

const OscillatorModel& find_atom(std::string_view name) {
  for (const auto& e : atom_catalog()) {
    if (iequals(e.model.name(), name)) return e.model;
  }
  throw ValidationError("unknown atom '" + std::string(name) +
                        "' (known: " + known_names(atom_catalog()) + ")");
}

const DielectricModel& find_material(std::string_view name) {
  if (iequals(name, "PC")) name = "PerfectConductor";
  for (const auto& e : material_catalog()) {
    if (iequals(e.model.name(), name)) return e.model;
  }
  throw ValidationError("unknown material '" + std::string(name) +
                        "' (known: " + known_names(material_catalog()) + ")");
}

std::string catalog_json(int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["units"] = {
      {"alpha_au", "atomic units of polarizability"},
      {"alpha_SI", "C^2 m^2 J^-1"},
      {"omega_eV", "eV"},
      {"omega_rad_per_s", "rad/s"},
      {"au_polarizability_SI", kAtomicUnitPolarizability},
  };

  ordered_json atoms = ordered_json::array();
  for (const auto& entry : atom_catalog()) {
    ordered_json terms = ordered_json::array();
    for (std::size_t k = 0; k < entry.table.size(); ++k) {
      const auto& term = entry.model.terms()[k];
      terms.push_back({
          {"alpha_au", entry.table[k].alpha_au},
          {"omega_eV", entry.table[k].omega_ev},
          {"alpha_SI", term.alpha_static.value},
          {"omega_rad_per_s", term.omega.value},
      });
    }
    atoms.push_back({
        {"name", entry.model.name()},
        {"model", entry.model.single_oscillator() ? "single-oscillator" : "two-oscillator"},
        {"terms", std::move(terms)},
    });
  }
  doc["atoms"] = std::move(atoms);

  ordered_json materials = ordered_json::array();
  for (const auto& entry : material_catalog()) {
    ordered_json m = {{"name", entry.model.name()}, {"description", entry.description}};
    std::visit(
        [&m](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Drude>) {
            m["model"] = "drude";
            m["omega_p_rad_per_s"] = v.plasma.value;
            m["gamma_rad_per_s"] = v.damping.value;
          } else if constexpr (std::is_same_v<T, DrudeLorentz>) {
            m["model"] = "drude-lorentz";
            ordered_json terms = ordered_json::array();
            for (const auto& t : v.terms) {
              terms.push_back({{"omega_p_rad_per_s", t.plasma.value},
                               {"omega_T_rad_per_s", t.transverse.value},
                               {"gamma_rad_per_s", t.damping.value}});
            }
            m["terms"] = std::move(terms);
          } else {
            m["model"] = "perfect-conductor";
          }
        },
        entry.model.model());
    materials.push_back(std::move(m));
  }
  doc["materials"] = std::move(materials);
  return doc.dump(indent);
}

}  // namespace casimir_knob
