#include "multitrig/ext_real.hpp"

#include <stdexcept>

namespace multitrig {

namespace {
constexpr double kKernelUlps = 8.0;
double kernel_err(const DoubleDouble& v) {
  return kKernelUlps * DoubleDouble::epsilon() * std::abs(v.hi());
}
}  // namespace

ExtReal log(const ExtReal& a) {
  const DoubleDouble v = log(a.value);
  const double margin = std::abs(a.value.hi()) * (1 - 0x1p-50) - a.err;
  if (!(margin > 0.0)) return {v, std::numeric_limits<double>::infinity()};
  return {v, detail::up(a.err / margin + kernel_err(v) + 1e-300)};
}

ExtReal exp(const ExtReal& a) {
  const DoubleDouble v = exp(a.value);
  return {v, detail::up(std::abs(v.hi()) * (1 + 0x1p-50) * std::expm1(a.err) + kernel_err(v))};
}

ExtReal pow(const ExtReal& a, int n) {
  if (n < 0) return ExtReal(1.0) / pow(a, -n);
  ExtReal result(1.0);
  ExtReal base = a;
  unsigned m = static_cast<unsigned>(n);
  while (m != 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m != 0) base = base * base;
  }
  return result;
}

ExtReal pi_ext() { return {dd_const::pi(), 2e-32}; }
ExtReal ln2_ext() { return {dd_const::ln2(), 1e-32}; }

bool consistent(const ExtReal& a, const ExtReal& b, double slack) {
  const double diff = std::abs((a.value - b.value).to_double());
  return diff <= a.err + b.err + slack;
}

}  // namespace multitrig
