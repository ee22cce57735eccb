#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "delzant/lattice.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

/// Exact value of an offset literal: an integer, a decimal with at most 12
/// significant digits (optionally with exponent), or a fraction "p/q".
/// Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

/// Reads `{"dim": n, "facets": [{"normal": [...], "offset": ...}, ...]}`.
/// Errors name the field path and its line, e.g. `facets[2].offset (line 7)`.
std::vector<Halfspace> parse_halfspaces(const std::string& text);

DelzantPolytope parse_polytope(const std::string& text);
DelzantPolytope load_polytope(const std::string& path);

std::string polytope_to_json(const DelzantPolytope& polytope);

}  // namespace delzant
