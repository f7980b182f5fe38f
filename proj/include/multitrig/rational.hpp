#pragma once

// Exact rationals (GMP mpq) and their conversions to working precision.

#include <gmpxx.h>

#include <string>

#include "multitrig/ext_real.hpp"

namespace multitrig {

using Rational = mpq_class;
using BigInt = mpz_class;

// Rounds q to double-double; err bounds |q - value| exactly (0 for dyadic
// rationals that fit).
ExtReal rational_to_ext(const Rational& q);
DoubleDouble rational_to_dd(const Rational& q);

// Exact rational value of a double-double (both limbs are dyadic).
Rational dd_to_rational(const DoubleDouble& x);

// "p/q" (or "p" when q == 1), canonical form.
std::string rational_to_string(const Rational& q);
// Accepts "p/q", integers and plain decimals ("0.25", "-1e-3"); decimals are
// converted exactly.
Rational parse_rational(const std::string& text);

// Nearest multiple of 1/denominator (ties round up), canonicalized.
Rational round_to_denominator(const DoubleDouble& x, const BigInt& denominator);
Rational round_to_denominator(const Rational& x, const BigInt& denominator);

// Closest rational with denominator <= max_denominator (continued fractions,
// semiconvergents included).
Rational best_rational(const Rational& x, const BigInt& max_denominator);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace multitrig
