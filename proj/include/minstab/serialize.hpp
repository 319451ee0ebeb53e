#pragma once

#include <string>

#include "minstab/types.hpp"

namespace minstab {

// Versioned structured-text form: header, switch table, link table,
// terminal maps. Round-trips byte-identically through parse_network.
std::string serialize_network(const Network& net);

// Parses the structured-text form. Throws ParseError with line/column on
// malformed input, unknown link kinds, or references to missing switches.
Network parse_network(const std::string& text);

}  // namespace minstab
