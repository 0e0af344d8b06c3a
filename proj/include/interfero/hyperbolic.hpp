#pragma once

#include <ostream>

#include "interfero/rational.hpp"

namespace interfero {

/// Element x + jy of the hyperbolic (split-complex) algebra G, j^2 = 1.
///
/// T is either double (transcendental operations) or Rational (exact
/// algebra). The indefinite form |z|^2 = x^2 - y^2 is multiplicative;
/// elements on the light cone x = +-y are the zero divisors.
template <typename T>
struct GNumber {
  T x{0};
  T y{0};

  GNumber() = default;
  GNumber(T re, T im) : x(std::move(re)), y(std::move(im)) {}

  friend bool operator==(const GNumber& a, const GNumber& b) { return a.x == b.x && a.y == b.y; }
};

using GReal = GNumber<double>;
using GExact = GNumber<Rational>;

template <typename T>
GNumber<T> g_add(const GNumber<T>& a, const GNumber<T>& b) {
  return {T(a.x + b.x), T(a.y + b.y)};
}

template <typename T>
GNumber<T> g_sub(const GNumber<T>& a, const GNumber<T>& b) {
  return {T(a.x - b.x), T(a.y - b.y)};
}

template <typename T>
GNumber<T> g_mul(const GNumber<T>& a, const GNumber<T>& b) {
  return {T(a.x * b.x + a.y * b.y), T(a.x * b.y + b.x * a.y)};
}

template <typename T>
GNumber<T> g_scale(const T& k, const GNumber<T>& z) {
  return {T(k * z.x), T(k * z.y)};
}

template <typename T>
GNumber<T> g_conj(const GNumber<T>& z) {
  return {z.x, T(-z.y)};
}

/// x^2 - y^2; negative outside G+.
template <typename T>
T g_norm_sq(const GNumber<T>& z) {
  return T(z.x * z.x - z.y * z.y);
}

/// Membership in the multiplicative semigroup G+ = {|z|^2 >= 0}.
template <typename T>
bool g_in_plus(const GNumber<T>& z) {
  return g_norm_sq(z) >= 0;
}

/// Membership in the group G+* = {|z|^2 > 0}.
template <typename T>
bool g_in_plus_star(const GNumber<T>& z) {
  return g_norm_sq(z) > 0;
}

/// True when x = y or x = -y.
template <typename T>
bool g_on_light_cone(const GNumber<T>& z) {
  return z.x == z.y || z.x == -z.y;
}

/// conj(z) / |z|^2. Throws NotInvertible unless z is in G+*.
template <typename T>
GNumber<T> g_inverse(const GNumber<T>& z);

extern template GNumber<double> g_inverse(const GNumber<double>&);
extern template GNumber<Rational> g_inverse(const GNumber<Rational>&);

/// Hyperbolic Euler formula e^{j theta} = cosh theta + j sinh theta.
/// Throws RangeError when cosh overflows.
GReal g_exp(double theta);

/// z = sign * modulus * e^{j phase}, valid on G+*.
struct GPolar {
  int sign = 1;
  double modulus = 1.0;
  double phase = 0.0;
};

/// Polar form of z in G+*: (sign x, sqrt(x^2 - y^2), artanh(y/x)).
/// Throws NotInvertible when |z|^2 <= 0.
GPolar g_polar(const GReal& z);

GReal g_reconstruct(const GPolar& polar);

GReal to_real(const GExact& z);

template <typename T>
std::ostream& operator<<(std::ostream& os, const GNumber<T>& z) {
  return os << '(' << z.x << ", " << z.y << ')';
}

}  // namespace interfero
