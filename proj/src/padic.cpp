#include "interfero/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_same_prime(const PadicRational& x, const PadicRational& y, const char* where) {
  if (x.prime() != y.prime()) {
    throw PrimeMismatch(std::string(where) + ": operands live in Q_" + std::to_string(x.prime().value()) +
                        " and Q_" + std::to_string(y.prime().value()));
  }
}

// Closed-ball exponent equivalent to the ball; open balls of radius p^n
// coincide with closed balls of radius p^{n-1} because |.|_p only takes
// values p^k.
long closed_exponent(const PadicBall& b) {
  switch (b.kind) {
    case BallKind::closed:
      return b.radius_exponent;
    case BallKind::open:
      return b.radius_exponent - 1;
    case BallKind::sphere:
      break;
  }
  throw std::invalid_argument("spheres are not balls");
}

// |a - b|_p <= p^n.
bool within(const PadicRational& a, const PadicRational& b, long n) {
  Order d = padic_order(a - b);
  return d.is_infinite() || d.value() >= -n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw NotPrime(std::to_string(value) + " is not prime");
  }
}

long Order::value() const {
  if (!finite_) throw std::logic_error("order of zero is infinite");
  return value_;
}

std::strong_ordering operator<=>(const Order& a, const Order& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return a.value_ <=> b.value_;
}

std::string to_string(const Order& order) {
  return order.is_infinite() ? "+inf" : std::to_string(order.value());
}

long multiplicity(const Integer& n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("multiplicity of p in 0 is unbounded");
  Integer rest;
  Integer prime(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

PadicRational::PadicRational(Prime p, Rational value) : p_(p), value_(std::move(value)), order_(Order::infinite()) {
  value_.canonicalize();
  if (value_ != 0) {
    order_ = Order(multiplicity(value_.get_num(), p_) - multiplicity(value_.get_den(), p_));
  }
}

Rational PadicRational::unit_part() const {
  if (is_zero()) throw std::domain_error("zero has no unit part");
  Rational u = value_ / rational_pow(p_, order_.value());
  u.canonicalize();
  return u;
}

Order padic_order(const PadicRational& x) { return x.order(); }

Rational padic_abs(const PadicRational& x) {
  if (x.is_zero()) return Rational(0);
  return rational_pow(x.prime(), -x.order().value());
}

Rational padic_distance(const PadicRational& x, const PadicRational& y) {
  require_same_prime(x, y, "padic_distance");
  return padic_abs(x - y);
}

PadicRational padic_arith(const PadicRational& x, const PadicRational& y, ArithOp op) {
  require_same_prime(x, y, "padic_arith");
  switch (op) {
    case ArithOp::add:
      return {x.prime(), Rational(x.value() + y.value())};
    case ArithOp::sub:
      return {x.prime(), Rational(x.value() - y.value())};
    case ArithOp::mul:
      return {x.prime(), Rational(x.value() * y.value())};
    case ArithOp::div:
      if (y.is_zero()) throw DivisionByZero("padic_arith: division by zero");
      return {x.prime(), Rational(x.value() / y.value())};
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

PadicRational operator+(const PadicRational& x, const PadicRational& y) { return padic_arith(x, y, ArithOp::add); }
PadicRational operator-(const PadicRational& x, const PadicRational& y) { return padic_arith(x, y, ArithOp::sub); }
PadicRational operator*(const PadicRational& x, const PadicRational& y) { return padic_arith(x, y, ArithOp::mul); }
PadicRational operator/(const PadicRational& x, const PadicRational& y) { return padic_arith(x, y, ArithOp::div); }

Rational DigitExpansion::partial_sum(std::size_t terms) const {
  Rational sum(0);
  if (leading_exponent.is_infinite()) return sum;
  long e = leading_exponent.value();
  for (std::size_t k = 0; k < terms && k < digits.size(); ++k) {
    sum += Rational(Integer(static_cast<unsigned long>(digits[k]))) * rational_pow(p, e + static_cast<long>(k));
  }
  return sum;
}

DigitExpansion padic_digits(const PadicRational& x, std::size_t count) {
  DigitExpansion out{x.prime(), Order::infinite(), {}};
  if (x.is_zero()) return out;
  out.leading_exponent = x.order();
  out.digits.reserve(count);

  const Integer p(static_cast<unsigned long>(x.prime().value()));
  Rational u = x.unit_part();
  for (std::size_t k = 0; k < count; ++k) {
    // a = num * den^{-1} mod p; den stays coprime to p throughout.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), u.get_den().get_mpz_t(), p.get_mpz_t());
    Integer a = (u.get_num() * inv) % p;
    if (a < 0) a += p;
    out.digits.push_back(a.get_ui());
    u = (u - Rational(a)) / Rational(p);
    u.canonicalize();
  }
  return out;
}

std::string to_string(const DigitExpansion& e) {
  if (e.empty()) return "0";
  const bool spaced = e.p.value() > 10;
  const long lead = e.leading_exponent.value();
  const long top = lead + static_cast<long>(e.digits.size()) - 1;
  // Positions below the leading exponent are zero; positions between the
  // last computed digit and the units place are unknown ('?').
  auto digit_at = [&](long k) -> std::string {
    if (k > top) return "?";
    if (k < lead) return "0";
    return std::to_string(e.digits[static_cast<std::size_t>(k - lead)]);
  };
  std::string out = "…";
  const long high = std::max(top, 0L);
  const long low = std::min(lead, 0L);
  for (long k = high; k >= low; --k) {
    if (k == -1) {
      out += '.';
    } else if (spaced && k != high) {
      out += ' ';
    }
    out += digit_at(k);
  }
  return out;
}

bool ball_membership(const PadicBall& b, const PadicRational& x) {
  require_same_prime(b.center, x, "ball_membership");
  Order d = padic_order(x - b.center);
  long n = b.radius_exponent;
  switch (b.kind) {
    case BallKind::closed:
      return d.is_infinite() || d.value() >= -n;
    case BallKind::open:
      return d.is_infinite() || d.value() > -n;
    case BallKind::sphere:
      return d.is_finite() && d.value() == -n;
  }
  return false;
}

bool ball_contains(const PadicBall& outer, const PadicBall& inner) {
  require_same_prime(outer.center, inner.center, "ball_contains");
  long n_out = closed_exponent(outer);
  long n_in = closed_exponent(inner);
  return n_in <= n_out && within(inner.center, outer.center, n_out);
}

bool balls_intersect(const PadicBall& a, const PadicBall& b) {
  require_same_prime(a.center, b.center, "balls_intersect");
  return within(a.center, b.center, std::max(closed_exponent(a), closed_exponent(b)));
}

}  // namespace interfero
