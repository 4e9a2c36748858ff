#pragma once

#include <span>
#include <string>
#include <string_view>

#include "casimir_knob/sweep.hpp"

namespace casimir_knob {

inline constexpr int kConfigSchemaVersion = 1;

// Shortest decimal that round-trips to the same double; "nan"/"inf" for
// non-finite values.
std::string format_number(double v);

// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(std::string_view text);

// Header: scenario,atom,material,R_m,a_m,z_a_m,theta0_rad,E0_V_per_m,method,
//         F_disp_N,F_el_N,F_net_N,gamma,warnings
// Warnings are joined with ';'. Lines end with CRLF.
std::string rows_to_csv(std::span<const SweepRow> rows);

// Array of objects with the CSV column names as keys; warnings is an array.
std::string rows_to_json(std::span<const SweepRow> rows);

std::string rows_to_text(std::span<const SweepRow> rows, OutputFormat format);

// Versioned JSON config (schema_version 1). Unknown keys and wrong types are
// ValidationErrors. Keys absent from the document keep the values already in
// `base`.
SweepConfig config_from_json(std::string_view text, const SweepConfig& base = {});
SweepConfig load_config(const std::string& path, const SweepConfig& base = {});
std::string config_to_json(const SweepConfig& config, int indent = 2);

OutputFormat parse_format(std::string_view name);

}  // namespace casimir_knob
