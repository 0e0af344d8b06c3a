#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

namespace interfero::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {"pb1",    "pb2",    "p11",    "p12",  "p21",     "p22",
                                             "theta1", "theta2", "sign1",  "sign2", "mode",   "numeric"};
  return keys;
}

double parse_plain(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  return v;
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ":" + std::to_string(line) + ": expected 'key = value'");
    }
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (!known_keys().count(key)) {
      throw ConfigError(source + ":" + std::to_string(line) + ": unknown field '" + key + "'");
    }
    if (value.empty()) {
      throw ConfigError(source + ":" + std::to_string(line) + ": field '" + key + "' has no value");
    }
    if (out.count(key)) {
      throw ConfigError(source + ":" + std::to_string(line) + ": field '" + key + "' given twice");
    }
    out[key] = ConfigValue{value, line};
  }
  return out;
}

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) return parse_plain(s);

  std::string coeff = s.substr(0, pi_at);
  std::string rest = s.substr(pi_at + 2);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double k = 1.0;
  if (coeff == "-") {
    k = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    k = parse_plain(coeff);
  }
  double m = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("malformed angle '" + text + "'");
    m = parse_plain(rest.substr(1));
    if (m == 0.0) throw std::invalid_argument("zero divisor in angle '" + text + "'");
  }
  return k * std::numbers::pi / m;
}

}  // namespace interfero::cli
