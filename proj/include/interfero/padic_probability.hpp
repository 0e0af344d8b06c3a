#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "interfero/padic.hpp"

namespace interfero {

/// Amplitudes alpha1, alpha2 in Q_p combined with a p-adic unit epsilon.
/// Construction enforces a common prime, nonzero amplitudes and |eps|_p = 1.
class PadicAmplitudePair {
 public:
  /// Throws PrimeMismatch, DegenerateContext (zero amplitude) or
  /// DomainError (epsilon not a unit).
  PadicAmplitudePair(PadicRational alpha1, PadicRational alpha2, PadicRational epsilon);

  Prime prime() const noexcept { return alpha1_.prime(); }
  const PadicRational& alpha1() const noexcept { return alpha1_; }
  const PadicRational& alpha2() const noexcept { return alpha2_; }
  const PadicRational& epsilon() const noexcept { return epsilon_; }

 private:
  PadicRational alpha1_;
  PadicRational alpha2_;
  PadicRational epsilon_;
};

/// A: P1 > P2, B: P1 < P2, C: P1 = P2.
enum class PadicCase { A, B, C };

std::string_view to_string(PadicCase c);

/// Outcome of P = |alpha1 + eps alpha2|_p^2. All quantities are exact.
struct PadicInterference {
  PadicCase which = PadicCase::A;
  Rational p1;
  Rational p2;
  Rational p;
  Rational lambda;
  /// c = |eps1 + eps eps2|_p^2, present only in case C.
  std::optional<Rational> c;
};

PadicInterference padic_interfere(const PadicAmplitudePair& a);

struct LambdaRangeCheck {
  Rational lambda;
  double theta = 0.0;
  /// Cases A/B give lambda in (-1/2, 0), case C in [-1, -1/2].
  bool within_claimed_range = false;
};

LambdaRangeCheck lambda_range_check(const PadicAmplitudePair& a);

/// One point of the symmetric two-slit profile (eps1 = eps2 = 1).
struct SlitPoint {
  std::uint64_t epsilon = 0;
  /// v_p(1 + epsilon).
  long order = 0;
  Rational p_exact;
  double p_float = 0.0;
};

/// P(eps) = A p^{-2 v_p(1 + eps)} with A = p^{-2l}, for every eps in
/// [1, eps_max] not divisible by p.
std::vector<SlitPoint> padic_slit_profile(Prime p, unsigned long l, std::uint64_t eps_max);

}  // namespace interfero
