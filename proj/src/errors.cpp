#include "interfero/errors.hpp"

#include <cstdio>

namespace interfero {

std::string NotAProbability::format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace interfero
