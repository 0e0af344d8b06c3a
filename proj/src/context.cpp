#include "interfero/context.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "interfero/errors.hpp"
#include "interfero/interference.hpp"
#include "interfero/probability.hpp"
#include "interfero/tolerance.hpp"

namespace interfero {

namespace {

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }
bool is_probability(const Rational& v) { return v >= 0 && v <= 1; }

bool sums_to_one(double a, double b) { return std::fabs(a + b - 1.0) <= tolerance::kStochastic; }
bool sums_to_one(const Rational& a, const Rational& b) { return a + b == 1; }

std::string show(double v) { return std::to_string(v); }
std::string show(const Rational& v) { return to_string(v); }

template <typename T>
void validate_impl(const BasicContextTransform<T>& t) {
  for (int i = 0; i < 2; ++i) {
    if (!is_probability(t.pb[i])) {
      throw ValidationError("prior pb" + std::to_string(i + 1) + " = " + show(t.pb[i]) + " is not in [0, 1]");
    }
  }
  if (!sums_to_one(t.pb[0], t.pb[1])) {
    throw ValidationError("priors sum to " + show(T(t.pb[0] + t.pb[1])) + ", expected 1");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!is_probability(t.cond[i][j])) {
        throw ValidationError("conditional p" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                              show(t.cond[i][j]) + " is not in [0, 1]");
      }
    }
    if (!sums_to_one(t.cond[i][0], t.cond[i][1])) {
      throw ValidationError("row " + std::to_string(i + 1) + " of the conditional matrix sums to " +
                            show(T(t.cond[i][0] + t.cond[i][1])) + ", expected 1");
    }
  }
  for (int j = 0; j < 2; ++j) {
    if (t.signs[j] != 1 && t.signs[j] != -1) {
      throw ValidationError("sign" + std::to_string(j + 1) + " must be +1 or -1");
    }
  }
}

template <typename T>
Pair<T> classical_impl(const BasicContextTransform<T>& t) {
  validate(t);
  Pair<T> out;
  for (int j = 0; j < 2; ++j) {
    out[j] = t.pb[0] * t.cond[0][j] + t.pb[1] * t.cond[1][j];
  }
  return out;
}

double cross_magnitude(const ContextTransform& t, int j) {
  return 2.0 * std::sqrt(t.pb[0] * t.cond[0][j] * t.pb[1] * t.cond[1][j]);
}

// cos theta_j, or eps_j cosh theta_j.
double cross_factor(const ContextTransform& t, int j) {
  if (t.mode == ContextMode::trigonometric) return cos_phase(t.phases[j]);
  return t.signs[j] * std::cosh(t.phases[j]);
}

Pair<double> raw_outputs(const ContextTransform& t) {
  Pair<double> classical = total_prob_classical(t);
  Pair<double> out;
  for (int j = 0; j < 2; ++j) {
    out[j] = classical[j] + cross_magnitude(t, j) * cross_factor(t, j);
  }
  return out;
}

// Reports every offending component, not just the first.
Pair<double> checked_outputs(const ContextTransform& t, const char* label) {
  Pair<double> raw = raw_outputs(t);
  Pair<double> out{};
  std::string failures;
  std::optional<double> first_bad;
  for (int j = 0; j < 2; ++j) {
    try {
      out[j] = checked_probability(raw[j], "");
    } catch (const NotAProbability&) {
      if (!first_bad) first_bad = raw[j];
      if (!failures.empty()) failures += ", ";
      failures += "p" + std::to_string(j + 1) + "^a = " + NotAProbability::format(raw[j]);
    }
  }
  if (first_bad) {
    throw NotAProbability(*first_bad, std::string(label) + ": " + failures + " not in [0, 1]");
  }
  return out;
}

double reduce_angle(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

std::string_view to_string(ContextMode m) {
  return m == ContextMode::trigonometric ? "trigonometric" : "hyperbolic";
}

void validate(const ContextTransform& t) { validate_impl(t); }
void validate(const ExactContextTransform& t) { validate_impl(t); }

Pair<double> total_prob_classical(const ContextTransform& t) { return classical_impl(t); }
Pair<Rational> total_prob_classical(const ExactContextTransform& t) { return classical_impl(t); }

Pair<double> total_prob_quantum(const ContextTransform& t) {
  ContextTransform trig = t;
  trig.mode = ContextMode::trigonometric;
  return checked_outputs(trig, "quantum total probability");
}

Pair<double> total_prob_hyperbolic(const ContextTransform& t) {
  if (t.mode != ContextMode::hyperbolic) {
    throw std::invalid_argument("total_prob_hyperbolic requires a hyperbolic-mode context");
  }
  return checked_outputs(t, "hyperbolic total probability");
}

ComplexLinearTransform sqrt_linear_transform(const ContextTransform& t) {
  if (t.mode != ContextMode::trigonometric) {
    throw std::invalid_argument("sqrt_linear_transform requires a trigonometric-mode context");
  }
  validate(t);
  ComplexLinearTransform out;
  for (int i = 0; i < 2; ++i) out.x[i] = std::sqrt(t.pb[i]);
  for (int j = 0; j < 2; ++j) {
    out.d[0][j] = std::sqrt(t.cond[0][j]);
    double r = std::sqrt(t.cond[1][j]);
    out.d[1][j] = {r * cos_phase(t.phases[j]), r * sin_phase(t.phases[j])};
  }
  for (int j = 0; j < 2; ++j) {
    out.y[j] = out.x[0] * out.d[0][j] + out.x[1] * out.d[1][j];
  }
  return out;
}

HyperbolicLinearTransform g_linear_transform(const ContextTransform& t) {
  if (t.mode != ContextMode::hyperbolic) {
    throw std::invalid_argument("g_linear_transform requires a hyperbolic-mode context");
  }
  validate(t);
  HyperbolicLinearTransform out;
  for (int i = 0; i < 2; ++i) out.x[i] = GReal(std::sqrt(t.pb[i]), 0.0);
  for (int j = 0; j < 2; ++j) {
    out.d[0][j] = GReal(std::sqrt(t.cond[0][j]), 0.0);
    out.d[1][j] = g_scale(t.signs[j] * std::sqrt(t.cond[1][j]), g_exp(t.phases[j]));
  }
  for (int j = 0; j < 2; ++j) {
    out.y[j] = g_add(g_mul(out.x[0], out.d[0][j]), g_mul(out.x[1], out.d[1][j]));
  }
  return out;
}

Pair<double> phases_from_state_expansion(const Matrix2<double>& xi, const Pair<double>& xi_b) {
  Pair<double> theta;
  for (int j = 0; j < 2; ++j) {
    theta[j] = reduce_angle((xi_b[1] + xi[1][j]) - (xi_b[0] + xi[0][j]));
  }
  return theta;
}

Pair<std::complex<double>> state_expansion_amplitudes(const ContextTransform& t, const Matrix2<double>& xi,
                                                      const Pair<double>& xi_b) {
  validate(t);
  Pair<std::complex<double>> amp{};
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      amp[j] += std::polar(std::sqrt(t.pb[i] * t.cond[i][j]), xi_b[i] + xi[i][j]);
    }
  }
  return amp;
}

NormalizationReport normalization_report(const ContextTransform& t) {
  validate(t);
  NormalizationReport r;
  Pair<double> out = raw_outputs(t);
  r.sum = out[0] + out[1];
  r.cross_term = cross_magnitude(t, 0) * cross_factor(t, 0) + cross_magnitude(t, 1) * cross_factor(t, 1);
  r.doubly_stochastic = sums_to_one(t.cond[0][0], t.cond[1][0]) && sums_to_one(t.cond[0][1], t.cond[1][1]);
  r.normalized = std::fabs(r.sum - 1.0) <= tolerance::kProbabilitySlack;
  return r;
}

}  // namespace interfero
