#pragma once

#include <string>
#include <string_view>

#include "dmc/solver.hpp"

namespace dmc {

/// Serializes a SolveReport per docs/report-schema.md. Key order is fixed, so
/// equal reports produce byte-identical text.
std::string format_report_json(const SolveReport& report, int indent = 2);

/// Inverse of format_report_json. Throws ParseError on malformed documents or
/// missing/mistyped fields.
SolveReport parse_report_json(std::string_view text);

}  // namespace dmc
