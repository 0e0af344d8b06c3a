#include "interfero/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace interfero {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 6) {
      throw std::invalid_argument("malformed exponent in '" + std::string(whole) + "'");
    }
    exponent = parse_integer(exp_text, whole).get_si();
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string mantissa;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    mantissa = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    mantissa = std::string(s);
  }
  Integer m = parse_integer(mantissa, whole);
  Rational q(m);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    q /= scale;
  } else {
    q *= scale;
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), text);
    Rational den = parse_decimal(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(text, text);
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
  constexpr unsigned kMantissaBits = 53;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= kMantissaBits && mpz_sizeinbase(den.get_mpz_t(), 2) <= kMantissaBits) {
    return num.get_d() / den.get_d();
  }
  return q.get_d();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer rn;
  Integer rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational rational_pow(unsigned long p, long e) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) return Rational(Integer(1), power);
  return Rational(power);
}

}  // namespace interfero
