#ifndef KP_KERNEL_HPP
#define KP_KERNEL_HPP

#include <utility>
#include <vector>

#include "kp/mat2.hpp"

// Physics kernel of the finite Kronig-Penney chain: cell geometry, wave
// numbers, the single-cell transfer matrix M and its real half-trace Phi,
// and node-by-node wave amplitude reconstruction.

namespace kp {

// One cell = barrier of width lambda followed by a well of width delta;
// N cells tile [0, L] with L = N * (delta + lambda).
struct ModelParams {
  double v;      // barrier height V (model units)
  double gamma;  // lambda/delta ratio
  double l;      // total length L (model units)
  unsigned n;    // number of cells N

  ModelParams(double v_, double gamma_, double l_, unsigned n_)
      : v(v_), gamma(gamma_), l(l_), n(n_) {
    if (!(v >= 0.0) || !(gamma >= 0.0) || !(l > 0.0) || n < 1)
      throw std::domain_error(
          "ModelParams: need V >= 0, gamma >= 0, L > 0, N >= 1");
  }

  double delta() const { return l / ((1.0 + gamma) * n); }
  double lambda() const { return gamma * l / ((1.0 + gamma) * n); }
  double period() const { return l / n; }
};

struct CellGeometry {
  double delta, lambda, period;
};

CellGeometry cell_geometry(const ModelParams& p);

// E_o = gamma V / (1 + gamma): the uniform barrier height the lattice
// blurs into in the continuum limit.
double e_threshold(const ModelParams& p);
double e_threshold(double gamma, double v);

struct WaveNumbers {
  double k;  // sqrt(E)
  cplx z;    // sqrt(V - E); real below the barrier, imaginary above
};

WaveNumbers wave_numbers(double e, double v);

// Branch-resolved single-cell quantities.  phi is the real half-trace of M,
// c the (real) off-diagonal magnitude (V/2kz) sinh(z lambda); m is the full
// matrix with m22 = conj(m11), m21 = conj(m12).
struct PhiKernel {
  double phi;
  double m11_im;
  double c;
  Mat2C m;
};

PhiKernel phi_kernel(double e, const ModelParams& p);

// Wave amplitudes region by region, recovered by back-propagating the
// outgoing amplitude (A_2N, 0) through the per-cell transfer matrices.
struct AmplitudeTrace {
  double e;
  ModelParams params;
  double k;
  cplx z;
  std::vector<double> nodes;                     // x_0 ... x_{2N-1}
  std::vector<std::pair<cplx, cplx>> plane_amps; // (A_2l, A_2l+1), l = 0..N
  std::vector<std::pair<cplx, cplx>> barrier_amps;  // (B_2j-1, B_2j), j = 1..N

  // psi and psi' evaluated at node j from the region on the given side
  std::pair<cplx, cplx> eval_left(std::size_t node) const;
  std::pair<cplx, cplx> eval_right(std::size_t node) const;

  // worst relative mismatch of (psi, psi') across all nodes
  double max_node_residual() const;
};

AmplitudeTrace amplitude_trace(double e, const ModelParams& p, cplx a_out);

}  // namespace kp

#endif  // KP_KERNEL_HPP
