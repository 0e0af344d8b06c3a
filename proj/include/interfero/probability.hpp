#pragma once

#include <string_view>

namespace interfero {

/// Returns raw when it lies in [0, 1]; values within the probability slack
/// of an endpoint are snapped to it. Throws NotAProbability otherwise.
double checked_probability(double raw, std::string_view what_for);

}  // namespace interfero
