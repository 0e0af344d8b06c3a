#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "interfero/hyperbolic.hpp"
#include "interfero/rational.hpp"

namespace interfero {

enum class ContextMode { trigonometric, hyperbolic };

std::string_view to_string(ContextMode m);

template <typename T>
using Pair = std::array<T, 2>;

template <typename T>
using Matrix2 = std::array<std::array<T, 2>, 2>;

/// Dichotomic variables b (prior) and a (observed) linked by conditional
/// probabilities cond[i][j] = P(a = a_j | b = b_i).
///
/// phases are trigonometric angles in trigonometric mode and hyperbolic
/// angles in hyperbolic mode; signs are used only in hyperbolic mode.
template <typename T>
struct BasicContextTransform {
  Pair<T> pb{T(1), T(0)};
  Matrix2<T> cond{{{T(1), T(0)}, {T(0), T(1)}}};
  ContextMode mode = ContextMode::trigonometric;
  Pair<double> phases{0.0, 0.0};
  Pair<int> signs{1, 1};
};

using ContextTransform = BasicContextTransform<double>;
using ExactContextTransform = BasicContextTransform<Rational>;

/// Throws ValidationError naming the offending prior or row.
void validate(const ContextTransform& t);
void validate(const ExactContextTransform& t);

/// P(a_j) = sum_i P(b_i) P(a_j | b_i).
Pair<double> total_prob_classical(const ContextTransform& t);
Pair<Rational> total_prob_classical(const ExactContextTransform& t);

/// Classical mixture plus 2 sqrt(p1b p1j p2b p2j) cos theta_j.
/// Throws NotAProbability naming the component.
Pair<double> total_prob_quantum(const ContextTransform& t);

/// Classical mixture plus 2 eps_j sqrt(p1b p1j p2b p2j) cosh theta_j.
/// Requires hyperbolic mode; throws NotAProbability naming the component.
Pair<double> total_prob_hyperbolic(const ContextTransform& t);

/// y_j = sum_i x_i d_ij with x_i = sqrt(pb_i).
///
/// The relative phase sits on the second row: d_1j = sqrt(p_1j),
/// d_2j = e^{i theta_j} sqrt(p_2j), so |y_j|^2 reproduces the quantum
/// total probability.
struct ComplexLinearTransform {
  Matrix2<std::complex<double>> d;
  Pair<std::complex<double>> x;
  Pair<std::complex<double>> y;
};

/// Requires trigonometric mode (std::invalid_argument otherwise).
ComplexLinearTransform sqrt_linear_transform(const ContextTransform& t);

/// G-linear analogue: d_1j = sqrt(p_1j), d_2j = eps_j e^{j theta_j} sqrt(p_2j).
struct HyperbolicLinearTransform {
  Matrix2<GReal> d;
  Pair<GReal> x;
  Pair<GReal> y;
};

/// Requires hyperbolic mode (std::invalid_argument otherwise).
HyperbolicLinearTransform g_linear_transform(const ContextTransform& t);

/// Relative phases of a state expanded as
///   phi = sum_i e^{i xi_i} sqrt(pb_i) |b_i>,
///   |b_i> = sum_j e^{i xi_ij} sqrt(p_ij) |a_j>:
/// theta_j = (xi_2 + xi_2j) - (xi_1 + xi_1j), reduced to [0, 2 pi).
Pair<double> phases_from_state_expansion(const Matrix2<double>& xi, const Pair<double>& xi_b);

/// Amplitudes of phi on |a_1>, |a_2> computed directly from the expansion.
Pair<std::complex<double>> state_expansion_amplitudes(const ContextTransform& t, const Matrix2<double>& xi,
                                                      const Pair<double>& xi_b);

/// Sum-to-one diagnostic. Outputs are never renormalized.
struct NormalizationReport {
  double sum = 0.0;
  /// 2 sqrt(p1b p2b) * (c_1 sqrt(p11 p21) + c_2 sqrt(p12 p22)) where c_j is
  /// cos theta_j (or eps_j cosh theta_j in hyperbolic mode).
  double cross_term = 0.0;
  bool doubly_stochastic = false;
  bool normalized = false;
};

NormalizationReport normalization_report(const ContextTransform& t);

}  // namespace interfero
