#include "interfero/probability.hpp"

#include <string>

#include "interfero/errors.hpp"
#include "interfero/tolerance.hpp"

namespace interfero {

double checked_probability(double raw, std::string_view what_for) {
  if (raw >= 0.0 && raw <= 1.0) return raw;
  if (raw < 0.0 && raw >= -tolerance::kProbabilitySlack) return 0.0;
  if (raw > 1.0 && raw <= 1.0 + tolerance::kProbabilitySlack) return 1.0;
  throw NotAProbability(std::string(what_for), raw);
}

}  // namespace interfero
