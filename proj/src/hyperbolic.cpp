#include "interfero/hyperbolic.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "interfero/errors.hpp"

namespace interfero {

template <typename T>
GNumber<T> g_inverse(const GNumber<T>& z) {
  T n = g_norm_sq(z);
  if (!(n > 0)) {
    throw NotInvertible("g_inverse: element is outside G+* (|z|^2 <= 0)");
  }
  return {T(z.x / n), T(-z.y / n)};
}

template GNumber<double> g_inverse(const GNumber<double>&);
template GNumber<Rational> g_inverse(const GNumber<Rational>&);

GReal g_exp(double theta) {
  if (!std::isfinite(theta)) {
    throw RangeError("g_exp: phase is not finite");
  }
  double c = std::cosh(theta);
  double s = std::sinh(theta);
  if (!std::isfinite(c) || !std::isfinite(s)) {
    throw RangeError("g_exp: cosh/sinh overflow at theta = " + std::to_string(theta));
  }
  return {c, s};
}

GPolar g_polar(const GReal& z) {
  double n = g_norm_sq(z);
  if (!(n > 0)) {
    throw NotInvertible("g_polar: element is outside G+* (|z|^2 <= 0)");
  }
  // x^2 > y^2 >= 0 forces x != 0.
  assert(z.x != 0.0);
  GPolar out;
  out.sign = z.x > 0 ? 1 : -1;
  // (|x| - |y|)(|x| + |y|) keeps precision near the light cone.
  double ax = std::fabs(z.x);
  double ay = std::fabs(z.y);
  out.modulus = std::sqrt((ax - ay) * (ax + ay));
  // artanh(y/x) written as a log of the two light-cone coordinates.
  double sy = out.sign * z.y;
  out.phase = 0.5 * std::log((ax + sy) / (ax - sy));
  return out;
}

GReal g_reconstruct(const GPolar& polar) {
  GReal e = g_exp(polar.phase);
  return g_scale(polar.sign * polar.modulus, e);
}

GReal to_real(const GExact& z) {
  return {to_double(z.x), to_double(z.y)};
}

}  // namespace interfero
