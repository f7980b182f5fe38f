#pragma once

#include <vector>

#include "multitrig/rational.hpp"

namespace multitrig {

// Polynomial a_0 + a_1 t + ... + a_d t^d with exact rational coefficients.
// Trailing zero coefficients are stripped, so the zero polynomial has no
// coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly monomial(int k, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;

  Rational operator()(const Rational& t) const;
  // Horner in double-double; only well conditioned for modest coefficients.
  DoubleDouble eval(const DoubleDouble& t) const;

  RationalPoly derivative() const;
  // P(t)/t, requires P(0) = 0
  RationalPoly divide_by_t() const;
  // exact integral over [0, 1]
  Rational integral01() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// j-th derivative at p in {0, 1}: j! a_j at 0, sum_{m>=j} a_m m!/(m-j)! at 1.
Rational derivative_at(const RationalPoly& p, int j, int point);

// t^{2 k0} (1 - t)^{2 k0}
RationalPoly weight_poly(int k0);

}  // namespace multitrig
