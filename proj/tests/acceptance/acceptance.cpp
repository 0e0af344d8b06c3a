// Acceptance gate. Each criterion prints one PASS/FAIL line; the exit status
// is nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "interfero/context.hpp"
#include "interfero/errors.hpp"
#include "interfero/hyperbolic.hpp"
#include "interfero/interference.hpp"
#include "interfero/padic.hpp"
#include "interfero/padic_probability.hpp"
#include "interfero/profiles.hpp"

using namespace interfero;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects violations, keeping the first one for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }
  void note(std::string s) { notes_ += (notes_.empty() ? "" : ", ") + std::move(s); }
  std::size_t cases() const { return cases_; }

  Outcome outcome() const {
    std::ostringstream os;
    os << cases_ << " checks, " << failures_ << " violations";
    if (!notes_.empty()) os << ", " << notes_;
    if (failures_ > 0) os << "; first: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::string show(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// v_p of a nonzero integer by repeated division.
long trial_valuation(Integer n, unsigned long p) {
  if (n == 0) throw std::logic_error("valuation of zero");
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  return v;
}

long trial_order(const Rational& q, unsigned long p) {
  return trial_valuation(q.get_num(), p) - trial_valuation(q.get_den(), p);
}

Rational p_power(unsigned long p, long e) {
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? Rational(m) : Rational(Integer(1), m);
}

Rational oracle_abs(const Rational& q, unsigned long p) {
  return q == 0 ? Rational(0) : p_power(p, -trial_order(q, p));
}

// ------------------------------------------------------------------ 1

Outcome criterion_slit_table() {
  Tally t;
  const std::vector<std::uint64_t> eps{1, 2, 4, 5, 7, 8};
  const std::vector<Rational> want{1, Rational(1, 9), 1, Rational(1, 9), 1, Rational(1, 81)};
  auto pts = padic_slit_profile(Prime(3), 0, 8);
  t.check(pts.size() == 6, [&] { return "expected 6 points, got " + std::to_string(pts.size()); });
  for (std::size_t i = 0; i < std::min<std::size_t>(pts.size(), 6); ++i) {
    t.check(pts[i].epsilon == eps[i] && pts[i].p_exact == want[i],
            [&] { return "eps = " + std::to_string(pts[i].epsilon) + ": P = " + to_string(pts[i].p_exact); });
  }
  auto prof = profile_padic(3, 0, 8);
  t.check(prof.exact_values.has_value() && prof.exact_values->size() == 6, [] { return "profile size"; });
  if (prof.exact_values) {
    for (std::size_t i = 0; i < std::min<std::size_t>(prof.exact_values->size(), 6); ++i) {
      t.check((*prof.exact_values)[i] == want[i] && prof.grid[i] == static_cast<double>(eps[i] + 1),
              [&] { return "profile r = " + show(prof.grid[i]); });
    }
  }
  // The general pattern: P = A/p^2 at eps = p - 1 and A/p^4 at eps = p^2 - 1.
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    auto row = padic_slit_profile(Prime(p), 0, p * p - 1);
    for (const auto& pt : row) {
      if (pt.epsilon == p - 1) t.check(pt.p_exact == p_power(p, -2), [&] { return "eps = p - 1, p = " + std::to_string(p); });
      if (pt.epsilon == p * p - 1) {
        t.check(pt.p_exact == p_power(p, -4), [&] { return "eps = p^2 - 1, p = " + std::to_string(p); });
      }
    }
  }
  return t.outcome();
}

// ------------------------------------------------------------------ 2

Outcome criterion_lambda_range() {
  Tally t;
  std::size_t count_ab = 0, count_c = 0;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const Prime prime(p);
    const long p4 = static_cast<long>(p * p * p * p);
    for (long l1 = 0; l1 <= 4; ++l1) {
      for (long l2 = 0; l2 <= 4; ++l2) {
        for (unsigned long u1 = 1; u1 < p; ++u1) {
          for (unsigned long u2 = 1; u2 < p; ++u2) {
            const Rational a1 = p_power(p, l1) * u1;
            const Rational a2 = p_power(p, l2) * u2;
            for (long e = 1; e < p4; ++e) {
              if (e % static_cast<long>(p) == 0) continue;
              for (long s : {1L, -1L}) {
                PadicAmplitudePair pair(PadicRational(prime, a1), PadicRational(prime, a2),
                                        PadicRational(prime, Rational(s * e)));
                PadicInterference r = padic_interfere(pair);
                const Rational& lam = r.lambda;
                bool ok = lam >= -1 && lam <= 0;
                if (r.which == PadicCase::C) {
                  ++count_c;
                  ok = ok && lam <= Rational(-1, 2) && l1 == l2;
                } else {
                  ++count_ab;
                  ok = ok && lam > Rational(-1, 2) && lam < 0 && l1 != l2;
                }
                t.check(ok, [&] {
                  return "p = " + std::to_string(p) + ", alpha1 = " + to_string(a1) + ", alpha2 = " + to_string(a2) +
                         ", eps = " + std::to_string(s * e) + ": lambda = " + to_string(lam);
                });
              }
            }
          }
        }
      }
    }
  }
  t.note("A/B " + std::to_string(count_ab) + ", C " + std::to_string(count_c));
  return t.outcome();
}

// ------------------------------------------------------------------ 3

Outcome criterion_amplitude_oracle() {
  Tally t;
  double worst = 0.0;
  const int n = 50;
  auto lin = [](double lo, double hi, int i, int count) { return lo + (hi - lo) * i / (count - 1); };
  for (int i = 0; i < n; ++i) {
    const double p1 = lin(0.0, 1.0, i, n);
    for (int j = 0; j < n; ++j) {
      const double p2 = lin(0.0, 1.0, j, n);
      const double a = std::sqrt(p1), b = std::sqrt(p2);
      for (int k = 0; k < n; ++k) {
        const double theta = lin(0.0, 2 * kPi, k, n);
        const double oracle = std::norm(std::complex<double>(a) + std::polar(b, theta));
        const double scale = p1 + p2 + 2 * a * b * std::fabs(std::cos(theta));
        double got;
        try {
          got = interfere_trig(p1, p2, theta);
        } catch (const NotAProbability&) {
          got = trig_value(p1, p2, theta);
          t.check(got < 0.0 || got > 1.0, [&] { return "rejected in-range trig value " + show(got); });
        }
        const double rel = scale == 0.0 ? std::fabs(got - oracle) : std::fabs(got - oracle) / scale;
        worst = std::max(worst, rel);
        t.check(rel <= 1e-12, [&] {
          return "trig p1 = " + show(p1) + ", p2 = " + show(p2) + ", theta = " + show(theta) + ": rel " + show(rel);
        });

        const double h = lin(0.0, 4.0, k, n);
        for (int sign : {1, -1}) {
          // G-amplitude sqrt(p1) + sign e^{jh} sqrt(p2), norm x^2 - y^2.
          const double x = a + sign * b * std::cosh(h);
          const double y = sign * b * std::sinh(h);
          const double g_oracle = x * x - y * y;
          const double g_scale = p1 + p2 + 2 * a * b * std::cosh(h);
          double g_got;
          try {
            g_got = interfere_hyp(p1, p2, h, sign);
          } catch (const NotAProbability&) {
            g_got = hyp_value(p1, p2, h, sign);
            t.check(g_got < 0.0 || g_got > 1.0, [&] { return "rejected in-range hyp value " + show(g_got); });
          }
          const double g_rel = g_scale == 0.0 ? std::fabs(g_got - g_oracle) : std::fabs(g_got - g_oracle) / g_scale;
          worst = std::max(worst, g_rel);
          t.check(g_rel <= 1e-12, [&] {
            return "hyp p1 = " + show(p1) + ", p2 = " + show(p2) + ", theta = " + show(h) + ", sign " +
                   std::to_string(sign) + ": rel " + show(g_rel);
          });
        }
      }
    }
  }
  t.note("max rel error " + show(worst));
  return t.outcome();
}

// ------------------------------------------------------------------ 4

Outcome criterion_theta_bounds() {
  Tally t;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  std::size_t drawn = 0;
  while (drawn < 1000) {
    const double a = unit(rng);
    const double b = unit(rng) * (1.0 - a);
    const double p1 = a * a, p2 = b * b;
    if (p1 * p2 == 0.0) continue;
    ThetaBounds tb = theta_bounds(p1, p2);
    if (tb.q_plus < 1.0) continue;  // rounding at a + b ~ 1
    ++drawn;
    const double q_plus = (1 - p1 - p2) / (2 * a * b);
    const double q_minus = (p1 + p2) / (2 * a * b);
    t.check(tb.theta_max.has_value(), [&] { return "theta_max missing for q+ = " + show(tb.q_plus); });
    if (!tb.theta_max) continue;
    const double max_closed = std::log(q_plus + std::sqrt(q_plus * q_plus - 1));
    const double min_closed = std::log(q_minus + std::sqrt(q_minus * q_minus - 1));
    t.check(std::fabs(*tb.theta_max - max_closed) <= 1e-9 * std::max(1.0, max_closed),
            [&] { return "theta_max " + show(*tb.theta_max) + " vs " + show(max_closed); });
    t.check(std::fabs(tb.theta_min - min_closed) <= 1e-9 * std::max(1.0, min_closed),
            [&] { return "theta_min " + show(tb.theta_min) + " vs " + show(min_closed); });
    const double top = hyp_value(p1, p2, *tb.theta_max, 1);
    const double bottom = hyp_value(p1, p2, tb.theta_min, -1);
    worst = std::max({worst, std::fabs(top - 1.0), std::fabs(bottom)});
    t.check(std::fabs(top - 1.0) <= 1e-12, [&] {
      return "P+(theta_max) = " + show(top) + " for p1 = " + show(p1) + ", p2 = " + show(p2);
    });
    t.check(std::fabs(bottom) <= 1e-12, [&] {
      return "P-(theta_min) = " + show(bottom) + " for p1 = " + show(p1) + ", p2 = " + show(p2);
    });
  }
  ThetaBounds w1 = theta_bounds(1.0 / 16, 1.0 / 16);
  t.check(std::fabs(w1.q_plus - 7.0) <= 1e-12, [&] { return "q+ = " + show(w1.q_plus); });
  t.check(w1.theta_max && std::fabs(*w1.theta_max - std::log(7 + 4 * std::sqrt(3.0))) <= 1e-12,
          [&] { return "theta_max witness " + show(w1.theta_max.value_or(-1)); });
  ThetaBounds w2 = theta_bounds(0.25, 1.0 / 16);
  t.check(std::fabs(w2.q_minus - 1.25) <= 1e-12, [&] { return "q- = " + show(w2.q_minus); });
  t.check(std::fabs(w2.theta_min - std::log(2.0)) <= 1e-12, [&] { return "theta_min witness " + show(w2.theta_min); });
  t.note("max |residual| " + show(worst));
  return t.outcome();
}

// ------------------------------------------------------------------ 5

Rational random_rational(std::mt19937_64& rng, long span) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Outcome criterion_hyperbolic_laws() {
  Tally t;
  std::mt19937_64 rng(5);
  const int n = 10000;

  for (int i = 0; i < n; ++i) {
    GExact a(random_rational(rng, 1000), random_rational(rng, 1000));
    GExact b(random_rational(rng, 1000), random_rational(rng, 1000));
    // Oracle product (x1 + j y1)(x2 + j y2) = x1 x2 + y1 y2 + j (x1 y2 + x2 y1).
    const Rational px = a.x * b.x + a.y * b.y;
    const Rational py = a.x * b.y + a.y * b.x;
    GExact ab = g_mul(a, b);
    t.check(ab.x == px && ab.y == py, [&] { return "product mismatch"; });
    t.check(g_norm_sq(ab) == (a.x * a.x - a.y * a.y) * (b.x * b.x - b.y * b.y),
            [&] { return "norm not multiplicative for a.x = " + to_string(a.x); });
  }

  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  for (int i = 0; i < n; ++i) {
    const double a = angle(rng), b = angle(rng);
    GReal ea = g_exp(a), eb = g_exp(b), lhs = g_mul(ea, eb), rhs = g_exp(a + b);
    const double scale = std::fabs(ea.x * eb.x) + std::fabs(ea.y * eb.y);
    t.check(std::fabs(lhs.x - rhs.x) <= 1e-10 * scale && std::fabs(lhs.y - rhs.y) <= 1e-10 * scale,
            [&] { return "Euler law a = " + show(a) + ", b = " + show(b); });
    t.check(std::fabs(ea.x - std::cosh(a)) <= 1e-10 * ea.x && std::fabs(ea.y - std::sinh(a)) <= 1e-10 * ea.x,
            [&] { return "e^{ja} != cosh a + j sinh a at a = " + show(a); });
  }

  std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
  for (int i = 0; i < n; ++i) {
    GReal z(coord(rng), coord(rng));
    if (std::fabs(z.x) < std::fabs(z.y)) std::swap(z.x, z.y);
    if (std::fabs(z.x) == std::fabs(z.y)) continue;
    GPolar polar = g_polar(z);
    GReal back = g_reconstruct(polar);
    const double mag = std::max(std::fabs(z.x), std::fabs(z.y));
    t.check(std::fabs(back.x - z.x) <= 1e-10 * mag && std::fabs(back.y - z.y) <= 1e-10 * mag, [&] {
      return "polar round trip z = (" + show(z.x) + ", " + show(z.y) + ")";
    });
    t.check(polar.sign == (z.x > 0 ? 1 : -1) &&
                std::fabs(polar.modulus - std::sqrt(z.x * z.x - z.y * z.y)) <= 1e-10 * mag,
            [&] { return "polar modulus/sign for z = (" + show(z.x) + ", " + show(z.y) + ")"; });
  }

  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < n; ++i) {
    Rational x = random_rational(rng, 50);
    Rational y;
    switch (coin(rng)) {
      case 0: y = x; break;
      case 1: y = -x; break;
      default: y = random_rational(rng, 50);
    }
    GExact z(x, y);
    const bool cone = x * x == y * y;
    t.check(g_on_light_cone(z) == cone, [&] { return "light cone flag for x = " + to_string(x); });
    bool threw = false;
    try {
      GExact inv = g_inverse(z);
      GExact one = g_mul(z, inv);
      t.check(one.x == 1 && one.y == 0, [&] { return "z z^{-1} != 1"; });
    } catch (const NotInvertible&) {
      threw = true;
    }
    t.check(threw == !(x * x > y * y), [&] { return "g_inverse defined off G+*"; });
    if (cone && z.x != 0) {
      // Nonzero light-cone elements are zero divisors: (x, y)(1, -y/x) = 0,
      // and the partner lies on the cone too.
      GExact partner(Rational(1), -y / x);
      GExact prod = g_mul(z, partner);
      t.check(prod.x == 0 && prod.y == 0 && g_on_light_cone(partner), [&] { return "missing zero divisor partner"; });
    }
    if (!cone) {
      // Off the cone multiplication by z is injective.
      GExact w(random_rational(rng, 50), random_rational(rng, 50));
      if (w.x != 0 || w.y != 0) {
        GExact prod = g_mul(z, w);
        t.check(prod.x != 0 || prod.y != 0, [&] { return "zero divisor off the light cone"; });
      }
    }
  }
  return t.outcome();
}

// ------------------------------------------------------------------ 6

Outcome criterion_ultrametric() {
  Tally t;
  std::mt19937_64 rng(6);
  const unsigned long primes[] = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<long> expo(-4, 4);
  const int n = 10000;

  // Values p^k * m / d stress both branches.
  auto sample = [&](unsigned long p) -> Rational {
    Rational q = random_rational(rng, 2000);
    return q * p_power(p, expo(rng));
  };

  std::size_t equality_branch = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned long p = primes[pick(rng)];
    const Prime prime(p);
    const Rational x = sample(p), y = sample(p);
    const PadicRational px(prime, x), py(prime, y);
    const Rational ax = oracle_abs(x, p), ay = oracle_abs(y, p);
    t.check(padic_abs(px) == ax, [&] { return "|" + to_string(x) + "|_" + std::to_string(p); });
    const Rational s = padic_abs(px + py);
    t.check(s == oracle_abs(x + y, p), [&] { return "|x+y| mismatch"; });
    const Rational m = std::max(ax, ay);
    t.check(s <= m, [&] { return "strong triangle fails for " + to_string(x) + ", " + to_string(y); });
    if (ax != ay) {
      ++equality_branch;
      t.check(s == m, [&] { return "equality branch fails for " + to_string(x) + ", " + to_string(y); });
    }
    t.check(padic_abs(px * py) == ax * ay, [&] { return "multiplicativity fails for " + to_string(x); });
    t.check(padic_distance(px, py) == oracle_abs(x - y, p), [&] { return "distance mismatch"; });
  }

  for (int i = 0; i < n; ++i) {
    const unsigned long p = primes[pick(rng)];
    const Prime prime(p);
    const long r = expo(rng);
    const PadicRational a(prime, sample(p));
    // A member x = a + p^{-r} t with |t|_p <= 1.
    Rational unit_like = Rational(std::uniform_int_distribution<long>(-500, 500)(rng));
    Integer den = std::uniform_int_distribution<long>(1, 500)(rng);
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) den += 1;
    unit_like /= den;
    const PadicRational x(prime, a.value() + p_power(p, -r) * unit_like);
    const PadicBall ua{a, r, BallKind::closed};
    const PadicBall ux{x, r, BallKind::closed};
    t.check(ball_membership(ua, x), [&] { return "constructed member not in ball"; });

    // Probes at assorted distances from a.
    for (int k = 0; k < 4; ++k) {
      const long m = r + std::uniform_int_distribution<long>(-3, 3)(rng);
      const PadicRational y(prime, a.value() + p_power(p, -m) * sample(p));
      const bool in_a = oracle_abs(y.value() - a.value(), p) <= p_power(p, r);
      t.check(ball_membership(ua, y) == in_a, [&] { return "closed membership disagrees with oracle"; });
      t.check(ball_membership(ux, y) == in_a, [&] { return "center invariance fails"; });
      const bool open_a = oracle_abs(y.value() - a.value(), p) < p_power(p, r);
      t.check(ball_membership(PadicBall{a, r, BallKind::open}, y) == open_a, [&] { return "open membership"; });
      t.check(open_a == ball_membership(PadicBall{a, r - 1, BallKind::closed}, y),
              [&] { return "open ball of radius p^r != closed ball of radius p^(r-1)"; });
      const bool on_sphere = oracle_abs(y.value() - a.value(), p) == p_power(p, r);
      t.check(ball_membership(PadicBall{a, r, BallKind::sphere}, y) == on_sphere, [&] { return "sphere membership"; });
    }

    // Nesting: closed balls are disjoint or nested.
    const long s = r + std::uniform_int_distribution<long>(0, 3)(rng);
    const PadicRational b(prime, a.value() + p_power(p, -(r + std::uniform_int_distribution<long>(-1, 4)(rng))) *
                                                 sample(p));
    const PadicBall small{a, r, BallKind::closed}, big{b, s, BallKind::closed};
    const bool nested = oracle_abs(a.value() - b.value(), p) <= p_power(p, s);
    t.check(ball_contains(big, small) == nested, [&] { return "containment disagrees with oracle"; });
    t.check(balls_intersect(small, big) == nested, [&] { return "intersecting balls are not nested"; });
    if (nested) t.check(ball_membership(big, x), [&] { return "member of inner ball not in outer"; });
  }
  t.note("equality branch hit " + std::to_string(equality_branch) + " times");
  return t.outcome();
}

// ------------------------------------------------------------------ 7

ContextTransform random_context(std::mt19937_64& rng, bool doubly_stochastic) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ContextTransform t;
  const double b = unit(rng);
  t.pb = {b, 1.0 - b};
  const double c = unit(rng);
  if (doubly_stochastic) {
    t.cond = {{{c, 1.0 - c}, {1.0 - c, c}}};
  } else {
    const double d = unit(rng);
    t.cond = {{{c, 1.0 - c}, {d, 1.0 - d}}};
  }
  return t;
}

Outcome criterion_total_probability() {
  Tally t;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

  for (int i = 0; i < 10000; ++i) {
    ContextTransform ctx = random_context(rng, false);
    ctx.phases = {kPi / 2, kPi / 2};
    auto q = total_prob_quantum(ctx);
    auto c = total_prob_classical(ctx);
    t.check(q == c, [&] { return "pi/2 collapse not exact: " + show(q[0]) + " vs " + show(c[0]); });
  }

  for (int i = 0; i < 10000; ++i) {
    ContextTransform ctx = random_context(rng, true);
    const double th = angle(rng);
    ctx.phases = {th, kPi - th};
    auto q = total_prob_quantum(ctx);
    NormalizationReport rep = normalization_report(ctx);
    t.check(std::fabs(q[0] + q[1] - 1.0) <= 1e-12 && rep.normalized && rep.doubly_stochastic,
            [&] { return "sum " + show(q[0] + q[1]) + " at theta1 = " + show(th); });
  }
  {
    // A violating pair must be flagged, not normalized away.
    ContextTransform ctx;
    ctx.pb = {0.5, 0.5};
    ctx.cond = {{{0.5, 0.5}, {0.5, 0.5}}};
    ctx.phases = {kPi / 3, kPi / 3};
    NormalizationReport rep = normalization_report(ctx);
    t.check(!rep.normalized && std::fabs(rep.sum - 1.5) <= 1e-12, [&] { return "violation not flagged"; });
  }

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ContextTransform ctx = random_context(rng, true);
    Matrix2<double> xi{{{angle(rng), angle(rng)}, {angle(rng), angle(rng)}}};
    Pair<double> xi_b{angle(rng), angle(rng)};
    ctx.phases = phases_from_state_expansion(xi, xi_b);
    auto q = total_prob_quantum(ctx);
    auto lib = state_expansion_amplitudes(ctx, xi, xi_b);
    for (int j = 0; j < 2; ++j) {
      std::complex<double> amp = 0.0;
      for (int k = 0; k < 2; ++k) amp += std::polar(std::sqrt(ctx.pb[k] * ctx.cond[k][j]), xi_b[k] + xi[k][j]);
      const double direct = std::norm(amp);
      worst = std::max({worst, std::fabs(q[j] - direct), std::fabs(std::norm(lib[j]) - direct)});
      t.check(std::fabs(q[j] - direct) <= 1e-12 && std::fabs(std::norm(lib[j]) - direct) <= 1e-12,
              [&] { return "state expansion component " + std::to_string(j) + ": " + show(q[j]) + " vs " + show(direct); });
    }
  }
  t.note("state-expansion max error " + show(worst));
  return t.outcome();
}

// ------------------------------------------------------------------ 8

struct Run {
  int status = -1;
  std::string output;
};

Run run_tool(const std::string& args) {
  const std::string cmd = std::string("\"") + INTERFERO_BINARY + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

Outcome criterion_cli_determinism() {
  Tally t;
  const auto dir = std::filesystem::temp_directory_path();
  const auto config = dir / "interfero_acceptance.cfg";
  std::ofstream(config) << "pb1 = 1/2\npb2 = 1/2\np11 = 1/2\np12 = 1/2\np21 = 1/2\np22 = 1/2\n"
                           "theta1 = 0\ntheta2 = pi\n";
  const auto out_file = dir / "interfero_acceptance_out.csv";

  const std::vector<std::string> commands{
      "fit 0.36 0.16 0.76",
      "fit 0.25 0.25 0.5",
      "fit 0.25 0 0.3",
      "fit 0.36 0.16 0.76 --mode exact",
      "profile trig --p1 0.25 --p2 0.25 --max 6.2832 --n 100",
      "profile padic --p 3 --l 0 --eps-max 8",
      "profile hyp --p1 0.0625 --p2 0.0625 --sign + --auto-window",
      "profile trig --p1 0.25 --p2 0.25 --max 6.2832 --n 100 --format json",
      "totalprob \"" + config.string() + "\"",
      "totalprob \"" + config.string() + "\" --mode exact",
      "padic --p 3 --alpha1 1 --alpha2 1 --epsilon 2",
      "check",
  };
  for (const auto& c : commands) {
    Run a = run_tool(c);
    Run b = run_tool(c);
    t.check(a.status != -1 && !a.output.empty(), [&] { return "could not run: " + c; });
    t.check(a.status == b.status && a.output == b.output, [&] { return "output differs: " + c; });
  }
  // --out writes the same bytes as standard output.
  const std::string padic = "profile padic --p 3 --l 0 --eps-max 8";
  Run direct = run_tool(padic);
  for (int k = 0; k < 2; ++k) {
    run_tool(padic + " --out \"" + out_file.string() + "\"");
    std::ifstream in(out_file, std::ios::binary);
    std::stringstream body;
    body << in.rdbuf();
    t.check(body.str() == direct.output, [&] { return "--out file differs from standard output"; });
  }
  std::filesystem::remove(config);
  std::filesystem::remove(out_file);
  return t.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "p-adic two-slit table", 1.0, criterion_slit_table},
      {2, "p-adic lambda range, exhaustive", 30.0, criterion_lambda_range},
      {3, "amplitude-oracle equivalence, 50^3 grid", 10.0, criterion_amplitude_oracle},
      {4, "theta_max / theta_min closed forms", 1.0, criterion_theta_bounds},
      {5, "hyperbolic algebra laws", 5.0, criterion_hyperbolic_laws},
      {6, "ultrametric suite", 5.0, criterion_ultrametric},
      {7, "total-probability coherence", 5.0, criterion_total_probability},
      {8, "CLI determinism", 0.0, criterion_cli_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over the " + show(c.budget_seconds) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ") "
              << o.detail << std::endl;
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
