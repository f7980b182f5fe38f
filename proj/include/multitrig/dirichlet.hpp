#pragma once

// Dirichlet-type series at integer orders: zeta, alternating zeta (eta),
// lambda and beta, each with an error bound.

#include <functional>
#include <stdexcept>
#include <string>

#include "multitrig/ext_real.hpp"
#include "multitrig/rational.hpp"

namespace multitrig {

enum class SpecialKind { kZeta, kEta, kLambda, kBeta, kCatalan, kLogMultiCos, kLogMultiSin };

std::string kind_name(SpecialKind kind);

struct SpecialValue {
  SpecialKind kind;
  int order = 0;     // s for the Dirichlet kinds, r for the multiple sine/cosine
  DoubleDouble x;    // argument of log C_r / log S_r, unused otherwise
  ExtReal val;
};

class OrderOutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxDirichletOrder = 1024;
// Orders up to this bound use exact Bernoulli/Euler closed forms when available.
inline constexpr int kClosedFormTableOrder = 64;

SpecialValue zeta(int s);       // s >= 2
SpecialValue eta(int s);        // s >= 1
SpecialValue lambda_fn(int s);  // s >= 2
SpecialValue beta_fn(int s);    // s >= 1
SpecialValue catalan();

// Exact tables, n <= kClosedFormTableOrder. B_1 = -1/2.
const Rational& bernoulli(int n);
const Rational& euler_number(int n);

// sum_{k>=0} (-1)^k a_k for a_k the moments of a positive measure on [0,1]
// (e.g. 1/(k+1)^s, 1/(2k+1)^s), accelerated with the Chebyshev weights of
// Cohen, Rodriguez Villegas and Zagier. Terms are used until the certified
// truncation bound 2 a_0 / d_n drops below target.
struct AlternatingSum {
  ExtReal value;     // err includes truncation and rounding
  int terms = 0;
  double truncation = 0.0;
};
AlternatingSum alternating_sum(const std::function<DoubleDouble(int)>& a, double target = 1e-32);

}  // namespace multitrig
