#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "interfero/hyperbolic.hpp"
#include "interfero/rational.hpp"

namespace interfero {

enum class Regime { trigonometric, hyperbolic, boundary, degenerate };

std::string_view to_string(Regime r);

/// Fitted description of a probability triple (p1, p2, p).
///
/// lambda is the normalized deviation (p - p1 - p2) / (2 sqrt(p1 p2)).
/// Trigonometric records carry phase in [0, pi] with sign +1; hyperbolic
/// records carry phase >= 0 and the sign of lambda. For degenerate records
/// (p1 p2 = 0) lambda and phase are NaN.
struct InterferenceRecord {
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  double lambda = 0.0;
  Regime regime = Regime::degenerate;
  double phase = 0.0;
  int sign = 1;
};

struct Phase {
  double theta = 0.0;
  int sign = 1;
};

/// cos(theta), exact (0, +-1) when theta is the double nearest to a
/// multiple of pi/2.
double cos_phase(double theta);
double sin_phase(double theta);

/// Throws DegenerateContext when p1 * p2 == 0 and std::invalid_argument
/// when an input is not a probability.
double lambda_of(double p1, double p2, double p);

/// Exact lambda when sqrt(p1 p2) is rational; throws DegenerateContext.
std::optional<Rational> lambda_of_exact(const Rational& p1, const Rational& p2, const Rational& p);

/// |lambda| < 1 trigonometric, |lambda| > 1 hyperbolic, |lambda| = 1 boundary.
Regime classify(double lambda);

/// (arccos lambda, +1) for |lambda| <= 1, else (arccosh |lambda|, sign lambda).
Phase phase_of(double lambda);

/// Raw p1 + p2 + 2 sqrt(p1 p2) cos(theta), no range check.
double trig_value(double p1, double p2, double theta);

/// Raw p1 + p2 + sign 2 sqrt(p1 p2) cosh(theta), no range check.
double hyp_value(double p1, double p2, double theta, int sign);

/// Trigonometric interference rule. Throws NotAProbability with the raw
/// value when the result leaves [0, 1].
double interfere_trig(double p1, double p2, double theta);

/// Hyperbolic interference rule. Throws NotAProbability with the raw value
/// when the result leaves [0, 1].
double interfere_hyp(double p1, double p2, double theta, int sign);

/// (sqrt p1, e^{i theta} sqrt p2).
std::pair<std::complex<double>, std::complex<double>> amplitudes_trig(double p1, double p2, double theta);

/// ((sqrt p1, 0), sign e^{j theta} sqrt p2).
std::pair<GReal, GReal> amplitudes_hyp(double p1, double p2, double theta, int sign);

/// Full record; throws DegenerateContext when p1 * p2 == 0.
InterferenceRecord fit_record(double p1, double p2, double p);

/// Value predicted by the record's parameterization.
double reconstruct(const InterferenceRecord& r);

/// Result of theta(s) = arccos u(s) over a parameter grid.
struct PhaseCurve {
  std::vector<double> parameters;
  std::vector<double> phases;
  /// Indices i where |theta(s_i) - theta(s_{i-1})| > pi/2.
  std::vector<std::size_t> jumps;
};

/// Applies the generalized parameterization lambda = u(s) pointwise.
/// Throws std::invalid_argument if |u(s)| > 1 anywhere on the grid.
PhaseCurve phase_curve(const std::function<double(double)>& u, std::span<const double> grid);

}  // namespace interfero
