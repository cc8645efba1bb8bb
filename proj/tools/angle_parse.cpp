#include "angle_parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace octa::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view s, std::string_view whole, const char* what = "angle") {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError(std::string("cannot parse ") + what + " '" + std::string(whole) + "'");
  }
  return value;
}

// Separators: ',' always; ';' and whitespace when `lenient`.
std::vector<std::string_view> split(std::string_view text, bool lenient) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool sep = i == text.size() || text[i] == ',' ||
                     (lenient && (text[i] == ';' || std::isspace(static_cast<unsigned char>(text[i]))));
    if (!sep) continue;
    const auto part = trim(text.substr(start, i - start));
    if (!part.empty()) parts.push_back(part);
    start = i + 1;
  }
  return parts;
}

} // namespace

double parse_angle(std::string_view text, bool degrees) {
  const std::string_view whole = text;
  text = trim(text);
  double divisor = 1.0;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    divisor = parse_decimal(text.substr(slash + 1), whole);
    if (divisor == 0.0) throw ParseError("zero divisor in angle '" + std::string(whole) + "'");
    text = trim(text.substr(0, slash));
  }
  if (const auto pi = text.find("pi"); pi != std::string_view::npos) {
    if (trim(text.substr(pi + 2)).size() != 0) {
      throw ParseError("cannot parse angle '" + std::string(whole) + "'");
    }
    auto coeff_text = trim(text.substr(0, pi));
    if (!coeff_text.empty() && coeff_text.back() == '*') {
      coeff_text = trim(coeff_text.substr(0, coeff_text.size() - 1));
    }
    double coeff = 1.0;
    if (coeff_text == "-") coeff = -1.0;
    else if (!coeff_text.empty() && coeff_text != "+") coeff = parse_decimal(coeff_text, whole);
    return coeff * kPi / divisor;
  }
  const double value = parse_decimal(text, whole) / divisor;
  return degrees ? value * kPi / 180.0 : value;
}

std::vector<double> parse_angle_list(std::string_view text, bool degrees) {
  std::vector<double> out;
  for (auto part : split(text, false)) out.push_back(parse_angle(part, degrees));
  return out;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, true)) out.push_back(parse_decimal(part, part, "number"));
  return out;
}

} // namespace octa::cli
