#include "interfero/padic_probability.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

Rational squared_abs(const PadicRational& x) {
  Rational a = padic_abs(x);
  return a * a;
}

// sqrt of a ratio of squared p-adic norms, which is always a power of p.
Rational root_of_power(const Rational& q) {
  auto r = exact_sqrt(q);
  if (!r) throw std::logic_error("ratio of squared p-adic norms is not a perfect square");
  return *r;
}

}  // namespace

PadicAmplitudePair::PadicAmplitudePair(PadicRational alpha1, PadicRational alpha2, PadicRational epsilon)
    : alpha1_(std::move(alpha1)), alpha2_(std::move(alpha2)), epsilon_(std::move(epsilon)) {
  if (alpha1_.prime() != alpha2_.prime() || alpha1_.prime() != epsilon_.prime()) {
    throw PrimeMismatch("amplitudes and epsilon must share one prime");
  }
  if (alpha1_.is_zero() || alpha2_.is_zero()) {
    throw DegenerateContext("p-adic amplitudes must be nonzero");
  }
  if (epsilon_.is_zero() || epsilon_.order().value() != 0) {
    throw DomainError("epsilon must be a p-adic unit (|epsilon|_p = 1), got order " + to_string(epsilon_.order()));
  }
}

std::string_view to_string(PadicCase c) {
  switch (c) {
    case PadicCase::A:
      return "A";
    case PadicCase::B:
      return "B";
    case PadicCase::C:
      return "C";
  }
  return "?";
}

PadicInterference padic_interfere(const PadicAmplitudePair& a) {
  PadicInterference out;
  out.p1 = squared_abs(a.alpha1());
  out.p2 = squared_abs(a.alpha2());
  out.p = squared_abs(a.alpha1() + a.epsilon() * a.alpha2());

  Rational half(1, 2);
  if (out.p1 > out.p2) {
    out.which = PadicCase::A;
    out.lambda = -half * root_of_power(Rational(out.p2 / out.p1));
    if (out.p != out.p1) throw std::logic_error("ultrametric equality violated in case A");
  } else if (out.p1 < out.p2) {
    out.which = PadicCase::B;
    out.lambda = -half * root_of_power(Rational(out.p1 / out.p2));
    if (out.p != out.p2) throw std::logic_error("ultrametric equality violated in case B");
  } else {
    out.which = PadicCase::C;
    Prime p = a.prime();
    PadicRational e1(p, a.alpha1().unit_part());
    PadicRational e2(p, a.alpha2().unit_part());
    Rational c = squared_abs(e1 + a.epsilon() * e2);
    out.lambda = c / 2 - 1;
    if (out.p != c * out.p1) throw std::logic_error("P != c P1 in case C");
    out.c = std::move(c);
  }
  out.lambda.canonicalize();
  return out;
}

LambdaRangeCheck lambda_range_check(const PadicAmplitudePair& a) {
  PadicInterference r = padic_interfere(a);
  LambdaRangeCheck out;
  out.lambda = r.lambda;
  out.theta = std::acos(to_double(r.lambda));
  const Rational half(-1, 2);
  if (r.which == PadicCase::C) {
    out.within_claimed_range = r.lambda >= -1 && r.lambda <= half;
  } else {
    out.within_claimed_range = r.lambda > half && r.lambda < 0;
  }
  return out;
}

std::vector<SlitPoint> padic_slit_profile(Prime p, unsigned long l, std::uint64_t eps_max) {
  std::vector<SlitPoint> out;
  const PadicRational alpha(p, rational_pow(p, static_cast<long>(l)));
  for (std::uint64_t eps = 1; eps <= eps_max; ++eps) {
    if (eps % p.value() == 0) continue;
    const Integer eps_int(static_cast<unsigned long>(eps));
    PadicAmplitudePair pair(alpha, alpha, PadicRational(p, Rational(eps_int)));
    PadicInterference r = padic_interfere(pair);
    SlitPoint pt;
    pt.epsilon = eps;
    pt.order = multiplicity(Integer(eps_int + 1), p);
    pt.p_float = to_double(r.p);
    pt.p_exact = std::move(r.p);
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace interfero
