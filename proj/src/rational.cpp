#include "multitrig/rational.hpp"

#include <stdexcept>

namespace multitrig {

Rational dd_to_rational(const DoubleDouble& x) {
  Rational r(x.hi());
  r += Rational(x.lo());
  r.canonicalize();
  return r;
}

DoubleDouble rational_to_dd(const Rational& q) {
  const double hi = q.get_d();
  Rational rest = q - Rational(hi);
  const double lo = rest.get_d();
  return DoubleDouble::renormalize(hi, lo);
}

ExtReal rational_to_ext(const Rational& q) {
  const DoubleDouble v = rational_to_dd(q);
  if (!isfinite(v)) return {v, std::numeric_limits<double>::infinity()};
  Rational diff = q - dd_to_rational(v);
  diff = abs(diff);
  return {v, diff == 0 ? 0.0 : detail::up(diff.get_d())};
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (text.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
  }
  // plain decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      digits += ch;
      seen_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("not a decimal: '" + text + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw std::invalid_argument("not a decimal: '" + text + "'");
    const std::string tail = text.substr(i + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(tail, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    if (used != tail.size()) throw std::invalid_argument("bad exponent in '" + text + "'");
    scale += e;
  }
  BigInt num(digits, 10);
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Rational round_to_denominator(const DoubleDouble& x, const BigInt& denominator) {
  return round_to_denominator(dd_to_rational(x), denominator);
}

Rational round_to_denominator(const Rational& x, const BigInt& denominator) {
  const Rational scaled = x * denominator + Rational(1, 2);
  BigInt n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational q(n, denominator);
  q.canonicalize();
  return q;
}

Rational best_rational(const Rational& x, const BigInt& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("best_rational: max_denominator must be >= 1");
  if (x.get_den() <= max_denominator) return x;
  // convergents p0/q0, p1/q1 of x until the next denominator would overflow
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigInt n = x.get_num(), d = x.get_den();
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const BigInt q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    const BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const BigInt rem = n - a * d;
    n = d;
    d = rem;
  }
  const BigInt k = (max_denominator - q0) / q1;
  Rational semi(p0 + k * p1, q0 + k * q1), conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  return abs(semi - x) <= abs(conv - x) ? semi : conv;
}

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace multitrig
