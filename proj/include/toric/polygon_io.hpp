#pragma once

#include <string>
#include <string_view>

#include "toric/lattice.hpp"

namespace toric {

// Two interchangeable polygon encodings:
//   text: one "x y" pair per line, '#' starts a comment, blank lines ignored
//   json: [[x, y], [x, y], ...]
// Both reject duplicate vertices. Parse errors are reported as invalid_input
// and, for the text form, carry the offending line number.

LatticePolygon parse_polygon_text(std::string_view text);
LatticePolygon parse_polygon_json(std::string_view text);

/// Dispatches on the first non-blank character ('[' selects JSON).
LatticePolygon parse_polygon(std::string_view text);
LatticePolygon read_polygon_file(const std::string& path);

std::string format_polygon_text(const LatticePolygon& p);
std::string format_polygon_json(const LatticePolygon& p);

}  // namespace toric
