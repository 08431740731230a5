#include "kp/chebyshev.hpp"

#include <cmath>
#include <limits>

namespace kp {

namespace {

constexpr double eps_confluence = 1e-7;  // window around |x| = 1
const double neg_inf = -std::numeric_limits<double>::infinity();

ChebValue from_value(double v) {
  if (v == 0.0) return {0.0, neg_inf, 0};
  return {v, std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
}

}  // namespace

double cheb_u_recurrence(long n, double x) {
  if (n <= -1) return 0.0;
  double um = 0.0, u = 1.0;
  for (long i = 0; i < n; ++i) {
    const double next = 2.0 * x * u - um;
    um = u;
    u = next;
  }
  return u;
}

ChebValue cheb_u(long n, double x) {
  if (n <= -1) return {0.0, neg_inf, 0};
  if (n == 0) return {1.0, 0.0, 1};
  const double ax = std::fabs(x);

  if (ax <= 1.0 - eps_confluence) {
    const double theta = std::acos(x);
    return from_value(std::sin((n + 1) * theta) / std::sin(theta));
  }

  if (ax >= 1.0 + eps_confluence) {
    // U_n(x) = sgn(x)^n sinh((n+1)a)/sinh(a), a = arccosh|x|
    const double a = std::acosh(ax);
    const double na = (n + 1) * a;
    const double log_abs =
        na + std::log1p(-std::exp(-2.0 * na)) - std::log(2.0 * std::sinh(a));
    const int sign = (x < 0.0 && (n & 1L)) ? -1 : 1;
    return {sign * std::exp(log_abs), log_abs, sign};
  }

  // Confluent window: three-term recurrence in extended precision.  Near
  // x = +-1 the recurrence error stays O(n^2 eps_long) which is ample here.
  long double um = 0.0L, u = 1.0L;
  const long double x2 = 2.0L * (long double)x;
  for (long i = 0; i < n; ++i) {
    const long double next = x2 * u - um;
    um = u;
    u = next;
  }
  return from_value((double)u);
}

Mat2C m_power_cheb(const PhiKernel& kern, unsigned n) {
  if (n < 1) throw std::domain_error("m_power_cheb: need n >= 1");
  const ChebValue u1 = cheb_u((long)n - 1, kern.phi);
  const ChebValue u2 = cheb_u((long)n - 2, kern.phi);
  if (!(std::fabs(u1.value) <= 1e280) || !(std::fabs(u2.value) <= 1e280))
    throw std::overflow_error(
        "m_power_cheb: U_{N-1} overflows, use the log-domain path");
  return cplx(u1.value) * kern.m - cplx(u2.value) * Mat2C::identity();
}

}  // namespace kp
