#ifndef KP_MAT2_HPP
#define KP_MAT2_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

// Complex 2x2 matrix algebra for the transfer-matrix formalism.  The two
// building blocks are the diagonal propagator Delta[a x] = diag(e^{ax}, e^{-ax})
// and the matching matrix T[a,x] whose rows are the wavefunction and its first
// derivative evaluated on the exponential basis.

namespace kp {

using cplx = std::complex<double>;

struct Mat2C {
  cplx a11{}, a12{}, a21{}, a22{};

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

  bool finite() const {
    auto ok = [](const cplx& c) {
      return std::isfinite(c.real()) && std::isfinite(c.imag());
    };
    return ok(a11) && ok(a12) && ok(a21) && ok(a22);
  }
};

struct EigenPair {
  cplx mu1, mu2;
};

inline Mat2C mul(const Mat2C& a, const Mat2C& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2C operator*(const Mat2C& a, const Mat2C& b) { return mul(a, b); }

inline Mat2C operator*(const cplx& s, const Mat2C& a) {
  return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

inline Mat2C operator-(const Mat2C& a, const Mat2C& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

inline cplx det(const Mat2C& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

inline Mat2C inv(const Mat2C& a) {
  const cplx d = det(a);
  if (std::abs(d) <= 1e-300)
    throw std::domain_error("mat2: singular matrix");
  const cplx id = 1.0 / d;
  return {id * a.a22, -id * a.a12, -id * a.a21, id * a.a11};
}

// Delta[alpha x] = diag(e^{alpha x}, e^{-alpha x})
inline Mat2C delta_mat(cplx alpha, double x) {
  const cplx ax = alpha * x;
  if (!(std::isfinite(ax.real()) && std::isfinite(ax.imag())))
    throw std::domain_error("delta_mat: non-finite exponent");
  return {std::exp(ax), 0.0, 0.0, std::exp(-ax)};
}

// T[alpha,x]: first row (e^{ax}, e^{-ax}), second row (a e^{ax}, -a e^{-ax}).
// Maps exponential-basis coefficients to (psi, psi') at x.
inline Mat2C t_mat(cplx alpha, double x) {
  if (alpha == cplx(0.0, 0.0))
    throw std::domain_error("t_mat: alpha = 0 gives a singular matrix");
  const cplx ep = std::exp(alpha * x);
  const cplx em = std::exp(-alpha * x);
  return {ep, em, alpha * ep, -alpha * em};
}

// m^n by exponentiation-by-squaring; the independent oracle for the
// Chebyshev closed form of the N-th power.
inline Mat2C mat_power_direct(Mat2C m, unsigned n) {
  Mat2C acc = Mat2C::identity();
  while (n > 0) {
    if (n & 1u) acc = mul(acc, m);
    n >>= 1u;
    if (n > 0) m = mul(m, m);
  }
  return acc;
}

// Eigenvalues of a unimodular matrix with real half-trace phi:
// mu = phi -+ sqrt(phi^2 - 1), complex conjugate pair on |phi| < 1.
inline EigenPair eigenvalues_sl2(double phi) {
  const cplx root = std::sqrt(cplx(phi * phi - 1.0, 0.0));
  return {cplx(phi, 0.0) - root, cplx(phi, 0.0) + root};
}

}  // namespace kp

#endif  // KP_MAT2_HPP
