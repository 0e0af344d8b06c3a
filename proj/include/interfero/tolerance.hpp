#pragma once

namespace interfero::tolerance {

// Absolute tolerance for floating reconstructions (polar round trips,
// inverses, fitted-record residuals).
inline constexpr double kReconstruction = 1e-10;

// Slack allowed when deciding whether a floating result is a probability.
// A value in [-kProbabilitySlack, 0) or (1, 1 + kProbabilitySlack] is
// snapped to the nearest endpoint; anything further out is an error.
inline constexpr double kProbabilitySlack = 1e-12;

// Stochasticity checks on floating conditional-probability matrices.
inline constexpr double kStochastic = 1e-12;

}  // namespace interfero::tolerance
