#include "multitrig/rational_poly.hpp"

#include <stdexcept>

namespace multitrig {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void RationalPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(k + 1));
  v.back() = c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * t + *it;
  return s;
}

DoubleDouble RationalPoly::eval(const DoubleDouble& t) const {
  DoubleDouble s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * t + rational_to_dd(*it);
  return s;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::divide_by_t() const {
  if (is_zero()) return {};
  if (coeffs_[0] != 0) throw std::invalid_argument("divide_by_t: P(0) != 0");
  return RationalPoly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Rational RationalPoly::integral01() const {
  Rational s = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s += coeffs_[k] / static_cast<long>(k + 1);
  return s;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < a.coeffs_.size()) v[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) v[k] += b.coeffs_[k];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + Rational(-1) * b; }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return RationalPoly(std::move(v));
}

Rational derivative_at(const RationalPoly& p, int j, int point) {
  if (j < 0) throw std::invalid_argument("derivative_at: negative order");
  if (point != 0 && point != 1) throw std::invalid_argument("derivative_at: point must be 0 or 1");
  if (j > p.degree()) return 0;
  if (point == 0) return Rational(factorial(static_cast<unsigned>(j))) * p.coeff(j);
  Rational s = 0;
  BigInt falling = factorial(static_cast<unsigned>(j));  // m!/(m-j)! at m = j
  for (int m = j; m <= p.degree(); ++m) {
    if (m > j) falling = falling * m / (m - j);
    s += p.coeff(m) * Rational(falling);
  }
  return s;
}

RationalPoly weight_poly(int k0) {
  if (k0 < 1) throw std::invalid_argument("weight_poly: k0 must be >= 1");
  const unsigned m = 2U * static_cast<unsigned>(k0);
  // t^m (1 - t)^m = sum_i C(m, i) (-1)^i t^{m+i}
  std::vector<Rational> v(2 * m + 1);
  for (unsigned i = 0; i <= m; ++i) v[m + i] = Rational(binomial(m, i)) * (i % 2 == 0 ? 1 : -1);
  return RationalPoly(std::move(v));
}

}  // namespace multitrig
