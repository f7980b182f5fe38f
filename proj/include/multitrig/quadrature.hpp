#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "multitrig/ext_real.hpp"

namespace multitrig {

using Integrand = std::function<DoubleDouble(const DoubleDouble&)>;

// Endpoint behaviour declared by the caller.
//
// A log-singular endpoint is removed with t = a + (b - a) u^2 (mirrored at the
// right end). left_pole_removed is informational: the integrand itself must
// evaluate the removable 0/0 form (see z_cot_z); it is echoed in the result.
struct SingularityHints {
  bool left_log = false;
  bool right_log = false;
  bool left_pole_removed = false;

  static SingularityHints none() { return {}; }
  static SingularityHints log_left() { return {true, false, false}; }
  static SingularityHints log_both() { return {true, true, false}; }
  static SingularityHints pole_left() { return {false, false, true}; }
};

struct QuadratureOptions {
  double tol = 1e-25;       // absolute
  double rel_tol = 0.0;     // relative to |integral|; the looser of the two wins
  std::size_t max_panels = std::size_t{1} << 16;
  SingularityHints hints;
};

struct QuadratureResult {
  ExtReal value;              // value.err includes err_estimate and rounding
  double err_estimate = 0.0;  // bisection error estimate
  std::size_t subdivisions = 0;
  SingularityHints flags;
};

class QuadratureError : public std::runtime_error {
 public:
  enum class Kind { kBudgetExhausted, kNonFiniteSample, kBadInterval };

  QuadratureError(Kind kind, const std::string& what, QuadratureResult partial = {})
      : std::runtime_error(what), kind_(kind), partial_(partial) {}

  Kind kind() const { return kind_; }
  // Best estimate at the point of failure (budget exhaustion only).
  const QuadratureResult& partial() const { return partial_; }

 private:
  Kind kind_;
  QuadratureResult partial_;
};

// Adaptive Gauss-Legendre quadrature (20-point panels, global bisection on the
// panel with the largest error estimate). Deterministic: the panel order and
// final summation order depend only on the inputs.
//
// Throws QuadratureError when a < b fails, when f returns a non-finite value at
// a node, or when the panel budget is exhausted before the tolerance is met.
QuadratureResult integrate(const Integrand& f, const DoubleDouble& a, const DoubleDouble& b,
                           const QuadratureOptions& options);

inline QuadratureResult integrate(const Integrand& f, const DoubleDouble& a, const DoubleDouble& b,
                                  double tol, SingularityHints hints = {}) {
  QuadratureOptions o;
  o.tol = tol;
  o.hints = hints;
  return integrate(f, a, b, o);
}

// Number of nodes in one panel; the rule integrates polynomials of degree
// 2 * kGaussNodes - 1 exactly.
inline constexpr int kGaussNodes = 20;

}  // namespace multitrig
