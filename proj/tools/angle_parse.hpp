#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octa::cli {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses one angle. Accepted forms: decimal radians ("1.25"), pi multiples
/// with an optional divisor ("pi", "2pi/3", "-0.5*pi", "pi/2"), and plain
/// fractions ("3/4"). With `degrees`, forms without "pi" are read as degrees.
/// Throws ParseError.
double parse_angle(std::string_view text, bool degrees = false);

/// Comma-separated list of parse_angle values.
std::vector<double> parse_angle_list(std::string_view text, bool degrees = false);

/// Decimal numbers separated by commas, semicolons or whitespace.
std::vector<double> parse_number_list(std::string_view text);

} // namespace octa::cli
