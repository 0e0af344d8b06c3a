#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "interfero/rational.hpp"

namespace interfero {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A prime number, checked at construction.
class Prime {
 public:
  /// Throws NotPrime.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// p-adic order: an integer, or +infinity for zero. The infinite case is a
/// distinct state rather than a large integer; value() on it throws.
class Order {
 public:
  static Order infinite() { return Order(); }
  explicit Order(long v) : finite_(true), value_(v) {}

  bool is_infinite() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }
  long value() const;

  friend bool operator==(const Order&, const Order&) = default;
  friend std::strong_ordering operator<=>(const Order& a, const Order& b);

 private:
  Order() = default;
  bool finite_ = false;
  long value_ = 0;
};

std::string to_string(const Order& order);

/// Multiplicity of p in a nonzero integer n.
long multiplicity(const Integer& n, std::uint64_t p);

/// Exact rational number viewed in Q_p.
///
/// The value is kept canonical (gcd 1, positive denominator) and the order
/// v = v_p(num) - v_p(den) is cached at construction, so |x|_p = p^{-v}.
class PadicRational {
 public:
  PadicRational(Prime p, Rational value);
  PadicRational(Prime p, long value) : PadicRational(p, Rational(value)) {}

  Prime prime() const noexcept { return p_; }
  const Rational& value() const noexcept { return value_; }
  const Order& order() const noexcept { return order_; }
  bool is_zero() const { return order_.is_infinite(); }

  /// Unit part u with x = p^order * u, |u|_p = 1. Throws on zero.
  Rational unit_part() const;

  friend bool operator==(const PadicRational& a, const PadicRational& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

 private:
  Prime p_;
  Rational value_;
  Order order_;
};

Order padic_order(const PadicRational& x);

/// |x|_p = p^{-order}, exactly; zero for x = 0.
Rational padic_abs(const PadicRational& x);

/// rho_p(x, y) = |x - y|_p. Throws PrimeMismatch.
Rational padic_distance(const PadicRational& x, const PadicRational& y);

enum class ArithOp { add, sub, mul, div };

/// Exact field operation. Throws PrimeMismatch, or DivisionByZero for div by 0.
PadicRational padic_arith(const PadicRational& x, const PadicRational& y, ArithOp op);

PadicRational operator+(const PadicRational& x, const PadicRational& y);
PadicRational operator-(const PadicRational& x, const PadicRational& y);
PadicRational operator*(const PadicRational& x, const PadicRational& y);
PadicRational operator/(const PadicRational& x, const PadicRational& y);

/// Canonical expansion x = sum_{k >= order} a_k p^k, a_k in {0, ..., p-1}.
struct DigitExpansion {
  Prime p;
  /// Exponent of digits.front(); infinite for the (empty) expansion of zero.
  Order leading_exponent;
  std::vector<std::uint64_t> digits;

  bool empty() const noexcept { return digits.empty(); }

  /// sum_k a_k p^k over the known digits.
  Rational partial_sum(std::size_t terms) const;
};

/// First `count` canonical digits starting at exponent order(x).
/// Zero yields an empty expansion with an infinite leading exponent.
DigitExpansion padic_digits(const PadicRational& x, std::size_t count);

/// Right-to-left notation "...a2a1a0.a-1a-2". Digits are separated by
/// spaces when p > 10.
std::string to_string(const DigitExpansion& e);

enum class BallKind { closed, open, sphere };

/// Closed ball U_r(a) = {|x-a|_p <= r}, open ball {< r} or sphere
/// S_r(a) = {= r}, with r = p^radius_exponent.
struct PadicBall {
  PadicRational center;
  long radius_exponent = 0;
  BallKind kind = BallKind::closed;
};

/// Throws PrimeMismatch.
bool ball_membership(const PadicBall& b, const PadicRational& x);

/// Closed-ball containment: U_r(a) subset of U_s(b).
bool ball_contains(const PadicBall& outer, const PadicBall& inner);

/// Closed or open balls; in an ultrametric space they meet only when nested.
bool balls_intersect(const PadicBall& a, const PadicBall& b);

}  // namespace interfero
