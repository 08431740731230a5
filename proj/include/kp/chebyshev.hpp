#ifndef KP_CHEBYSHEV_HPP
#define KP_CHEBYSHEV_HPP

#include "kp/kernel.hpp"
#include "kp/mat2.hpp"

// Chebyshev polynomials of the second kind U_n(x), evaluated stably in all
// three regimes: oscillatory (|x| < 1), confluent (|x| near 1) and
// hyperbolic (|x| > 1), where only the log of the magnitude stays
// representable for large n.

namespace kp {

struct ChebValue {
  double value;    // U_n(x); +-inf once the magnitude overflows
  double log_abs;  // ln|U_n(x)|; -inf iff the value is exactly zero
  int sign;        // -1, 0, +1
};

// U_n(x) for n >= -1 (U_{-1} = 0, U_0 = 1).
ChebValue cheb_u(long n, double x);

// Exact three-term recurrence U_{k+1} = 2x U_k - U_{k-1}; cross-check only,
// accurate for small n.
double cheb_u_recurrence(long n, double x);

// M^n = U_{n-1}(Phi) M - U_{n-2}(Phi) I.  Throws std::overflow_error when
// |U_{n-1}| exceeds 1e280; callers must switch to the log-domain
// transmission path.
Mat2C m_power_cheb(const PhiKernel& kern, unsigned n);

}  // namespace kp

#endif  // KP_CHEBYSHEV_HPP
