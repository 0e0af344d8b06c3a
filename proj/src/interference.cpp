#include "interfero/interference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "interfero/errors.hpp"
#include "interfero/probability.hpp"

namespace interfero {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_probability_input(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be a probability in [0, 1], got " + std::to_string(v));
  }
}

void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

// Quarter-turn index k when theta is exactly the double k * (pi/2).
std::optional<long> quarter_turn(double theta) {
  double k = std::nearbyint(theta / kHalfPi);
  if (std::fabs(k) > 1e15) return std::nullopt;
  if (k * kHalfPi != theta) return std::nullopt;
  long r = static_cast<long>(k) % 4;
  return r < 0 ? r + 4 : r;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::trigonometric:
      return "trigonometric";
    case Regime::hyperbolic:
      return "hyperbolic";
    case Regime::boundary:
      return "boundary";
    case Regime::degenerate:
      return "degenerate";
  }
  return "unknown";
}

double cos_phase(double theta) {
  if (auto q = quarter_turn(theta)) {
    static constexpr double kCos[] = {1.0, 0.0, -1.0, 0.0};
    return kCos[*q];
  }
  return std::cos(theta);
}

double sin_phase(double theta) {
  if (auto q = quarter_turn(theta)) {
    static constexpr double kSin[] = {0.0, 1.0, 0.0, -1.0};
    return kSin[*q];
  }
  return std::sin(theta);
}

double lambda_of(double p1, double p2, double p) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  require_probability_input(p, "p");
  if (p1 * p2 == 0.0) {
    throw DegenerateContext("lambda is undefined when p1 * p2 = 0");
  }
  return (p - p1 - p2) / (2.0 * std::sqrt(p1 * p2));
}

std::optional<Rational> lambda_of_exact(const Rational& p1, const Rational& p2, const Rational& p) {
  if (p1 * p2 == 0) {
    throw DegenerateContext("lambda is undefined when p1 * p2 = 0");
  }
  auto root = exact_sqrt(Rational(p1 * p2));
  if (!root) return std::nullopt;
  Rational lambda = (p - p1 - p2) / (2 * *root);
  lambda.canonicalize();
  return lambda;
}

Regime classify(double lambda) {
  if (std::isnan(lambda)) throw std::invalid_argument("classify: lambda is NaN");
  double a = std::fabs(lambda);
  if (a < 1.0) return Regime::trigonometric;
  if (a > 1.0) return Regime::hyperbolic;
  return Regime::boundary;
}

Phase phase_of(double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("phase_of: lambda must be finite");
  if (std::fabs(lambda) <= 1.0) return {std::acos(lambda), 1};
  return {std::acosh(std::fabs(lambda)), lambda > 0 ? 1 : -1};
}

double trig_value(double p1, double p2, double theta) {
  return p1 + p2 + 2.0 * std::sqrt(p1 * p2) * cos_phase(theta);
}

double hyp_value(double p1, double p2, double theta, int sign) {
  require_sign(sign);
  return p1 + p2 + sign * 2.0 * std::sqrt(p1 * p2) * std::cosh(theta);
}

double interfere_trig(double p1, double p2, double theta) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  return checked_probability(trig_value(p1, p2, theta), "trigonometric interference");
}

double interfere_hyp(double p1, double p2, double theta, int sign) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  return checked_probability(hyp_value(p1, p2, theta, sign), "hyperbolic interference");
}

std::pair<std::complex<double>, std::complex<double>> amplitudes_trig(double p1, double p2, double theta) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  double r2 = std::sqrt(p2);
  return {std::complex<double>(std::sqrt(p1), 0.0), std::complex<double>(r2 * cos_phase(theta), r2 * sin_phase(theta))};
}

std::pair<GReal, GReal> amplitudes_hyp(double p1, double p2, double theta, int sign) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  require_sign(sign);
  return {GReal(std::sqrt(p1), 0.0), g_scale(sign * std::sqrt(p2), g_exp(theta))};
}

InterferenceRecord fit_record(double p1, double p2, double p) {
  InterferenceRecord r;
  r.p1 = p1;
  r.p2 = p2;
  r.p = p;
  r.lambda = lambda_of(p1, p2, p);
  r.regime = classify(r.lambda);
  Phase ph = phase_of(r.lambda);
  r.phase = ph.theta;
  r.sign = ph.sign;
  return r;
}

double reconstruct(const InterferenceRecord& r) {
  if (r.regime == Regime::degenerate) return std::nan("");
  if (std::fabs(r.lambda) <= 1.0) return trig_value(r.p1, r.p2, r.phase);
  return hyp_value(r.p1, r.p2, r.phase, r.sign);
}

PhaseCurve phase_curve(const std::function<double(double)>& u, std::span<const double> grid) {
  PhaseCurve out;
  out.parameters.assign(grid.begin(), grid.end());
  out.phases.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double value = u(grid[i]);
    if (!(std::fabs(value) <= 1.0)) {
      throw std::invalid_argument("phase_curve: |u(s)| > 1 at s = " + std::to_string(grid[i]));
    }
    out.phases.push_back(std::acos(value));
    if (i > 0 && std::fabs(out.phases[i] - out.phases[i - 1]) > kHalfPi) {
      out.jumps.push_back(i);
    }
  }
  return out;
}

}  // namespace interfero
