#include "interfero/invariants.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "interfero/context.hpp"
#include "interfero/hyperbolic.hpp"
#include "interfero/interference.hpp"
#include "interfero/padic.hpp"
#include "interfero/padic_probability.hpp"
#include "interfero/profiles.hpp"

namespace interfero {

namespace {

using Rng = std::mt19937_64;

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  InvariantResult finish() { return std::move(result_); }

 private:
  InvariantResult result_;
};

bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

Rational random_rational(Rng& rng, long span) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::string show(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

InvariantResult check_norm_multiplicative(Rng& rng, std::size_t n) {
  Property prop("G: |ab|^2 = |a|^2 |b|^2 (exact)");
  for (std::size_t i = 0; i < n; ++i) {
    GExact a(random_rational(rng, 50), random_rational(rng, 50));
    GExact b(random_rational(rng, 50), random_rational(rng, 50));
    prop.record(g_norm_sq(g_mul(a, b)) == g_norm_sq(a) * g_norm_sq(b), [&] { return "a = " + to_string(a.x); });
  }
  return prop.finish();
}

InvariantResult check_euler_law(Rng& rng, std::size_t n) {
  Property prop("G: e^{ja} e^{jb} = e^{j(a+b)}");
  std::uniform_real_distribution<double> theta(-10.0, 10.0);
  for (std::size_t i = 0; i < n; ++i) {
    double a = theta(rng);
    double b = theta(rng);
    GReal ea = g_exp(a);
    GReal eb = g_exp(b);
    GReal lhs = g_mul(ea, eb);
    GReal rhs = g_exp(a + b);
    // Error measured against the magnitude of the summed products, since
    // opposite-sign phases cancel.
    double scale = std::fabs(ea.x * eb.x) + std::fabs(ea.y * eb.y);
    prop.record(std::fabs(lhs.x - rhs.x) <= 1e-10 * scale && std::fabs(lhs.y - rhs.y) <= 1e-10 * scale,
                [&] { return "a = " + show(a) + ", b = " + show(b); });
  }
  return prop.finish();
}

InvariantResult check_polar_round_trip(Rng& rng, std::size_t n) {
  Property prop("G: polar round trip on G+*");
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (std::size_t i = 0; i < n; ++i) {
    GReal z(coord(rng), coord(rng));
    if (g_norm_sq(z) <= 0.0) std::swap(z.x, z.y);
    if (g_norm_sq(z) <= 0.0) continue;
    GReal back = g_reconstruct(g_polar(z));
    prop.record(close_rel(back.x, z.x, 1e-10) && close_rel(back.y, z.y, 1e-10),
                [&] { return "z = (" + show(z.x) + ", " + show(z.y) + ")"; });
  }
  return prop.finish();
}

InvariantResult check_strong_triangle(Rng& rng, std::size_t n) {
  Property prop("Q_p: |x+y| <= max(|x|,|y|), equality when norms differ");
  const Prime primes[] = {Prime(2), Prime(3), Prime(5), Prime(7)};
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Prime p = primes[pick(rng)];
    PadicRational x(p, random_rational(rng, 1000));
    PadicRational y(p, random_rational(rng, 1000));
    Rational ax = padic_abs(x);
    Rational ay = padic_abs(y);
    Rational s = padic_abs(x + y);
    Rational m = ax > ay ? ax : ay;
    bool ok = s <= m && (ax == ay || s == m);
    prop.record(ok, [&] { return "x = " + to_string(x.value()) + ", y = " + to_string(y.value()); });
  }
  return prop.finish();
}

InvariantResult check_valuation_multiplicative(Rng& rng, std::size_t n) {
  Property prop("Q_p: |xy| = |x| |y|");
  const Prime primes[] = {Prime(2), Prime(3), Prime(5), Prime(7)};
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Prime p = primes[pick(rng)];
    PadicRational x(p, random_rational(rng, 1000));
    PadicRational y(p, random_rational(rng, 1000));
    prop.record(padic_abs(x * y) == padic_abs(x) * padic_abs(y),
                [&] { return "x = " + to_string(x.value()) + ", y = " + to_string(y.value()); });
  }
  return prop.finish();
}

InvariantResult check_trig_oracle(Rng& rng, std::size_t n) {
  Property prop("trigonometric rule = |sqrt p1 + e^{i theta} sqrt p2|^2");
  std::uniform_real_distribution<double> root(0.0, 0.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t i = 0; i < n; ++i) {
    double a = root(rng);
    double b = root(rng);
    double t = angle(rng);
    double direct = interfere_trig(a * a, b * b, t);
    double oracle = std::norm(std::complex<double>(a, 0.0) + std::polar(b, t));
    prop.record(std::fabs(direct - oracle) <= 1e-12 * (a * a + b * b + 2 * a * b),
                [&] { return "theta = " + show(t); });
  }
  return prop.finish();
}

InvariantResult check_hyp_oracle(Rng& rng, std::size_t n) {
  Property prop("hyperbolic rule = |sqrt p1 +- e^{j theta} sqrt p2|^2");
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 5.0);
  for (std::size_t i = 0; i < n; ++i) {
    double p1 = prob(rng);
    double p2 = prob(rng);
    double t = angle(rng);
    int sign = (i % 2 == 0) ? 1 : -1;
    auto [a1, a2] = amplitudes_hyp(p1, p2, t, sign);
    double oracle = g_norm_sq(g_add(a1, a2));
    double direct = hyp_value(p1, p2, t, sign);
    double scale = p1 + p2 + 2 * std::sqrt(p1 * p2) * std::cosh(t);
    prop.record(std::fabs(direct - oracle) <= 1e-12 * scale, [&] { return "theta = " + show(t); });
  }
  return prop.finish();
}

InvariantResult check_lambda_round_trip(Rng& rng, std::size_t n) {
  Property prop("lambda(p1, p2, P(theta)) = cos theta");
  std::uniform_real_distribution<double> root(0.05, 0.5);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (std::size_t i = 0; i < n; ++i) {
    double a = root(rng);
    double b = root(rng);
    double t = angle(rng);
    double lambda = lambda_of(a * a, b * b, interfere_trig(a * a, b * b, t));
    prop.record(std::fabs(lambda - std::cos(t)) <= 1e-12 * (a * a + b * b) / (2 * a * b) + 1e-15,
                [&] { return "theta = " + show(t); });
  }
  return prop.finish();
}

InvariantResult check_theta_bounds(Rng& rng, std::size_t n) {
  Property prop("P+(theta_max) = 1 and P-(theta_min) = 0");
  std::uniform_real_distribution<double> unit(0.001, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = unit(rng);
    double a = s * unit(rng);
    double b = s - a;
    if (a <= 0.0 || b <= 0.0) continue;
    double p1 = a * a;
    double p2 = b * b;
    ThetaBounds tb = theta_bounds(p1, p2);
    bool ok = tb.theta_max.has_value() && std::fabs(hyp_value(p1, p2, *tb.theta_max, 1) - 1.0) <= 1e-12 &&
              std::fabs(hyp_value(p1, p2, tb.theta_min, -1)) <= 1e-12;
    prop.record(ok, [&] { return "p1 = " + show(p1) + ", p2 = " + show(p2); });
  }
  return prop.finish();
}

InvariantResult check_total_prob_collapse(Rng& rng, std::size_t n) {
  Property prop("total probability at theta = pi/2 equals the classical formula");
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    ContextTransform t;
    double b = prob(rng);
    double c1 = prob(rng);
    double c2 = prob(rng);
    t.pb = {b, 1.0 - b};
    t.cond = {{{c1, 1.0 - c1}, {c2, 1.0 - c2}}};
    t.phases = {std::numbers::pi / 2, std::numbers::pi / 2};
    prop.record(total_prob_quantum(t) == total_prob_classical(t), [&] { return "pb1 = " + show(b); });
  }
  return prop.finish();
}

InvariantResult check_padic_lambda_range() {
  Property prop("p-adic lambda in [-1, 0] with the case bands");
  for (std::uint64_t pv : {2u, 3u, 5u}) {
    Prime p(pv);
    const std::uint64_t modulus = pv * pv * pv;
    for (long l1 = 0; l1 <= 2; ++l1) {
      for (long l2 = 0; l2 <= 2; ++l2) {
        PadicRational a1(p, rational_pow(pv, l1));
        PadicRational a2(p, rational_pow(pv, l2));
        for (std::uint64_t e = 1; e < modulus; ++e) {
          if (e % pv == 0) continue;
          for (long sgn : {1L, -1L}) {
            PadicRational eps(p, Rational(sgn * static_cast<long>(e)));
            LambdaRangeCheck r = lambda_range_check(PadicAmplitudePair(a1, a2, eps));
            prop.record(r.within_claimed_range, [&] { return "p = " + std::to_string(pv); });
          }
        }
      }
    }
  }
  return prop.finish();
}

InvariantResult check_slit_profile() {
  Property prop("p-adic slit profile P = A p^{-2 v_p(1 + eps)}");
  for (std::uint64_t pv : {2u, 3u, 5u, 7u}) {
    for (unsigned long l = 0; l <= 2; ++l) {
      for (const SlitPoint& pt : padic_slit_profile(Prime(pv), l, 200)) {
        std::uint64_t r = pt.epsilon + 1;
        long v = 0;
        while (r % pv == 0) {
          r /= pv;
          ++v;
        }
        Rational expected = rational_pow(pv, -2 * static_cast<long>(l) - 2 * v);
        prop.record(pt.p_exact == expected && pt.order == v,
                    [&] { return "p = " + std::to_string(pv) + ", eps = " + std::to_string(pt.epsilon); });
      }
    }
  }
  return prop.finish();
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  std::vector<InvariantResult> out;
  out.push_back(check_norm_multiplicative(rng, cases));
  out.push_back(check_euler_law(rng, cases));
  out.push_back(check_polar_round_trip(rng, cases));
  out.push_back(check_strong_triangle(rng, cases));
  out.push_back(check_valuation_multiplicative(rng, cases));
  out.push_back(check_trig_oracle(rng, cases));
  out.push_back(check_hyp_oracle(rng, cases));
  out.push_back(check_lambda_round_trip(rng, cases));
  out.push_back(check_theta_bounds(rng, cases));
  out.push_back(check_total_prob_collapse(rng, cases));
  out.push_back(check_padic_lambda_range());
  out.push_back(check_slit_profile());
  return out;
}

}  // namespace interfero
