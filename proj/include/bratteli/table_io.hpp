#pragma once

#include <string>
#include <string_view>

#include "bratteli/diagram.hpp"

namespace bratteli {

/// CSV with header "j,i,count", one row per entry sorted by (j,i).
std::string table_to_csv(const CountTable& t);

/// {"k":K,"jmax":J,"entries":[{"i":..,"j":..,"count":"<decimal>"},...]}.
/// Counts are strings so no consumer loses precision.
std::string table_to_json(const CountTable& t);

/// Inverse of table_to_json. Throws ParseError on malformed or inconsistent
/// input.
CountTable table_from_json(std::string_view text);

/// Triangular layout, heights k..0 top to bottom and lengths across.
/// With color, counts are highlighted by ANSI escapes.
std::string table_to_pretty(const CountTable& t, bool color);

}  // namespace bratteli
