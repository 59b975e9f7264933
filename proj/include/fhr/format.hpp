#pragma once

#include <string>

namespace fhr {

/// Shortest decimal string that parses back to exactly `value`.
std::string shortest_repr(double value);

/// Parses a full decimal string; throws Error(parse_error) on trailing junk.
double parse_double(const std::string& text);

}  // namespace fhr
