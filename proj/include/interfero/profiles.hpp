#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interfero/rational.hpp"

namespace interfero {

enum class ProfileKind { T, Ha, Hb, HaHb, Padic };

std::string_view to_string(ProfileKind k);

/// Radius window with the branch used on it; lo is inclusive, hi inclusive.
struct SignedInterval {
  double lo = 0.0;
  double hi = 0.0;
  int sign = 1;
};

/// Sampled brightness P(r). For T/Ha/Hb/HaHb the radius is the phase; for
/// the p-adic profile r = 1 + eps.
struct BrightnessProfile {
  ProfileKind kind = ProfileKind::T;
  std::vector<double> grid;
  std::vector<double> values;
  /// Per-sample branch label ("T", "Ha", "Hb", "Padic").
  std::vector<ProfileKind> sample_kinds;
  /// Exact values, present for p-adic profiles.
  std::optional<std::vector<Rational>> exact_values;

  double p1 = 0.0;
  double p2 = 0.0;
  std::vector<SignedInterval> partition;
  std::optional<std::uint64_t> prime;
  std::optional<unsigned long> l;
  std::optional<double> theta_max;
  std::optional<double> theta_min;
  /// Clipping and other non-fatal adjustments.
  std::vector<std::string> warnings;
};

/// n equally spaced samples over [lo, hi] (n >= 2, or n == 1 giving lo).
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// Throws InvalidProfile when p1 + p2 + 2 sqrt(p1 p2) exceeds 1.
BrightnessProfile profile_trig(double p1, double p2, std::span<const double> grid);

struct ThetaBounds {
  double q_plus = 0.0;
  double q_minus = 0.0;
  /// Absent when q+ < 1, i.e. P+(0) > 1.
  std::optional<double> theta_max;
  double theta_min = 0.0;
};

/// Throws DegenerateContext when p1 * p2 == 0.
ThetaBounds theta_bounds(double p1, double p2);

/// Samples P+- on grid points inside [0, theta_max] (sign +) or
/// [0, theta_min] (sign -). Points outside are dropped with a warning.
/// Throws InvalidProfile when the window is empty.
BrightnessProfile profile_hyp(double p1, double p2, int sign, std::span<const double> grid);

/// Samples P+ or P- according to a partition of disjoint intervals; grid
/// points outside every interval are skipped. Throws InvalidProfile on
/// overlapping intervals or an interval leaving its sign's window.
BrightnessProfile profile_piecewise(double p1, double p2, std::span<const SignedInterval> partition,
                                    std::span<const double> grid);

BrightnessProfile profile_padic(std::uint64_t p, unsigned long l, std::uint64_t eps_max);

}  // namespace interfero
