#include "interfero/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "interfero/errors.hpp"
#include "interfero/interference.hpp"
#include "interfero/padic_probability.hpp"
#include "interfero/tolerance.hpp"

namespace interfero {

namespace {

void require_probability_input(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be a probability in [0, 1], got " + std::to_string(v));
  }
}

double window_end(const ThetaBounds& b, int sign) {
  if (sign == 1) {
    if (!b.theta_max) {
      throw InvalidProfile("empty valid window: P+(0) = p1 + p2 + 2 sqrt(p1 p2) exceeds 1 (q+ = " +
                           std::to_string(b.q_plus) + " < 1)");
    }
    return *b.theta_max;
  }
  return b.theta_min;
}

ProfileKind branch_kind(int sign) { return sign == 1 ? ProfileKind::Ha : ProfileKind::Hb; }

}  // namespace

std::string_view to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::T:
      return "T";
    case ProfileKind::Ha:
      return "Ha";
    case ProfileKind::Hb:
      return "Hb";
    case ProfileKind::HaHb:
      return "HaHb";
    case ProfileKind::Padic:
      return "Padic";
  }
  return "?";
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_grid: need at least one sample");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw std::invalid_argument("uniform_grid: window must be finite with lo <= hi");
  }
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

BrightnessProfile profile_trig(double p1, double p2, std::span<const double> grid) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  const double peak = p1 + p2 + 2.0 * std::sqrt(p1 * p2);
  if (peak > 1.0 + tolerance::kProbabilitySlack) {
    throw InvalidProfile("trigonometric profile peaks at P = " + std::to_string(peak) + " > 1");
  }
  BrightnessProfile out;
  out.kind = ProfileKind::T;
  out.p1 = p1;
  out.p2 = p2;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double r : grid) out.values.push_back(interfere_trig(p1, p2, r));
  out.sample_kinds.assign(grid.size(), ProfileKind::T);
  return out;
}

ThetaBounds theta_bounds(double p1, double p2) {
  require_probability_input(p1, "p1");
  require_probability_input(p2, "p2");
  if (p1 * p2 == 0.0) throw DegenerateContext("theta bounds need p1 * p2 > 0");
  const double denom = 2.0 * std::sqrt(p1 * p2);
  ThetaBounds b;
  b.q_plus = (1.0 - p1 - p2) / denom;
  b.q_minus = (p1 + p2) / denom;
  if (b.q_plus >= 1.0) b.theta_max = std::acosh(b.q_plus);
  // q- >= 1 by AM-GM; only rounding can push it below.
  b.theta_min = std::acosh(std::max(b.q_minus, 1.0));
  return b;
}

BrightnessProfile profile_hyp(double p1, double p2, int sign, std::span<const double> grid) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  ThetaBounds b = theta_bounds(p1, p2);
  const double hi = window_end(b, sign);

  BrightnessProfile out;
  out.kind = branch_kind(sign);
  out.p1 = p1;
  out.p2 = p2;
  out.theta_max = b.theta_max;
  out.theta_min = b.theta_min;
  std::size_t clipped = 0;
  for (double r : grid) {
    if (r < 0.0 || r > hi) {
      ++clipped;
      continue;
    }
    out.grid.push_back(r);
    out.values.push_back(interfere_hyp(p1, p2, r, sign));
  }
  if (out.grid.empty()) {
    throw InvalidProfile("no grid point lies in the valid window [0, " + std::to_string(hi) + "]");
  }
  if (clipped > 0) {
    out.warnings.push_back("clipped " + std::to_string(clipped) + " grid point(s) outside [0, " +
                           std::to_string(hi) + "]");
  }
  out.sample_kinds.assign(out.grid.size(), out.kind);
  return out;
}

BrightnessProfile profile_piecewise(double p1, double p2, std::span<const SignedInterval> partition,
                                    std::span<const double> grid) {
  if (partition.empty()) throw InvalidProfile("piecewise profile needs at least one interval");
  ThetaBounds b = theta_bounds(p1, p2);

  std::vector<SignedInterval> parts(partition.begin(), partition.end());
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& iv = parts[i];
    if (iv.sign != 1 && iv.sign != -1) throw InvalidProfile("interval sign must be +1 or -1");
    if (!(iv.lo >= 0.0 && iv.lo <= iv.hi)) {
      throw InvalidProfile("interval [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "] is malformed");
    }
    const double end = window_end(b, iv.sign);
    if (iv.hi > end + tolerance::kProbabilitySlack) {
      throw InvalidProfile("interval [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "] with sign " +
                           (iv.sign == 1 ? "+" : "-") + " leaves the valid window [0, " + std::to_string(end) + "]");
    }
    if (i > 0 && iv.lo < parts[i - 1].hi) {
      throw InvalidProfile("intervals overlap near r = " + std::to_string(iv.lo));
    }
  }

  BrightnessProfile out;
  out.kind = ProfileKind::HaHb;
  out.p1 = p1;
  out.p2 = p2;
  out.partition = parts;
  out.theta_max = b.theta_max;
  out.theta_min = b.theta_min;
  std::size_t skipped = 0;
  for (double r : grid) {
    // A point shared by two touching intervals belongs to the earlier one.
    auto it = std::find_if(parts.begin(), parts.end(), [r](const auto& iv) { return r >= iv.lo && r <= iv.hi; });
    if (it == parts.end()) {
      ++skipped;
      continue;
    }
    out.grid.push_back(r);
    out.values.push_back(interfere_hyp(p1, p2, r, it->sign));
    out.sample_kinds.push_back(branch_kind(it->sign));
  }
  if (skipped > 0) {
    out.warnings.push_back("skipped " + std::to_string(skipped) + " grid point(s) outside every interval");
  }
  return out;
}

BrightnessProfile profile_padic(std::uint64_t p, unsigned long l, std::uint64_t eps_max) {
  const Prime prime(p);
  std::vector<SlitPoint> points = padic_slit_profile(prime, l, eps_max);
  BrightnessProfile out;
  out.kind = ProfileKind::Padic;
  out.prime = p;
  out.l = l;
  std::vector<Rational> exact;
  exact.reserve(points.size());
  for (auto& pt : points) {
    out.grid.push_back(static_cast<double>(pt.epsilon + 1));
    out.values.push_back(pt.p_float);
    exact.push_back(pt.p_exact);
  }
  out.exact_values = std::move(exact);
  out.sample_kinds.assign(out.grid.size(), ProfileKind::Padic);
  return out;
}

}  // namespace interfero
