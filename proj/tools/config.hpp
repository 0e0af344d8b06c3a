#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace interfero::cli {

/// Malformed config input; the message carries source, line and field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigValue {
  std::string text;
  int line = 0;  // 0 for values given on the command line
};

/// Flat "key = value" records. Blank lines and lines starting with '#' are
/// ignored; duplicate or unknown keys are errors.
using KeyValues = std::map<std::string, ConfigValue>;

KeyValues parse_key_values(std::istream& in, const std::string& source);

/// Phase in radians: a decimal number or a multiple of pi such as "pi",
/// "-pi/2", "2*pi/3", "2pi/3". Throws std::invalid_argument.
double parse_angle(const std::string& text);

}  // namespace interfero::cli
