#pragma once

#include <cmath>
#include <limits>

namespace lipsel {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_finite(double v) { return std::isfinite(v); }

// a - b with (+-inf) - (+-inf) = 0 for equal signs.
inline double ext_sub(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && (a > 0) == (b > 0)) return 0.0;
  return a - b;
}

// a / b for a, b >= 0 with 0/0 = 0, a/0 = +inf, a/inf = 0.
inline double ext_div(double a, double b) {
  if (a == 0.0) return 0.0;
  if (b == 0.0) return kInf;
  if (std::isinf(b)) return std::isinf(a) ? kInf : 0.0;
  return a / b;
}

// lambda * rho with 0 * inf = 0.
inline double ext_mul(double lambda, double rho) {
  if (lambda == 0.0 || rho == 0.0) return 0.0;
  return lambda * rho;
}

inline double positive_part(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace lipsel
