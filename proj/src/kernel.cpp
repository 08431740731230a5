#include "kp/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace kp {

CellGeometry cell_geometry(const ModelParams& p) {
  return {p.delta(), p.lambda(), p.period()};
}

double e_threshold(double gamma, double v) { return gamma * v / (1.0 + gamma); }

double e_threshold(const ModelParams& p) { return e_threshold(p.gamma, p.v); }

WaveNumbers wave_numbers(double e, double v) {
  if (!(e > 0.0)) throw std::domain_error("wave_numbers: need E > 0");
  return {std::sqrt(e), std::sqrt(cplx(v - e, 0.0))};
}

namespace {

// cosh(z lambda) and sinh(z lambda)/z as real functions of u = z^2 = V - E.
// Both are entire in u, so a short series bridges the z -> 0 confluence and
// the two analytic branches meet continuously.
struct HyperbolicPair {
  double ch;       // cosh(z*lam)  [= cos(w*lam) above the barrier]
  double sh_by_z;  // sinh(z*lam)/z [= sin(w*lam)/w above the barrier]
};

HyperbolicPair barrier_factors(double u, double lam, double eps_v_scale) {
  if (std::fabs(u) * lam * lam <= 1e-16 || std::fabs(u) <= eps_v_scale) {
    const double t = u * lam * lam;
    return {1.0 + t / 2.0 + t * t / 24.0,
            lam * (1.0 + t / 6.0 + t * t / 120.0)};
  }
  if (u > 0.0) {
    const double z = std::sqrt(u);
    return {std::cosh(z * lam), std::sinh(z * lam) / z};
  }
  const double w = std::sqrt(-u);
  return {std::cos(w * lam), std::sin(w * lam) / w};
}

}  // namespace

PhiKernel phi_kernel(double e, const ModelParams& p) {
  if (!(e > 0.0)) throw std::domain_error("phi_kernel: need E > 0");
  const auto [dlt, lam, per] = cell_geometry(p);
  const double k = std::sqrt(e);
  const double u = p.v - e;  // z^2
  const double eps_v = 1e-8 * std::max(1.0, p.v);

  const auto [ch, shz] = barrier_factors(u, lam, eps_v);

  const double cd = std::cos(k * dlt);
  const double sd = std::sin(k * dlt);
  // f*sinh(z lam) with f = (z^2 - k^2)/(2 k z), real in every branch
  const double fs = (u - e) / (2.0 * k) * shz;
  const double c = p.v / (2.0 * k) * shz;

  PhiKernel out;
  out.phi = cd * ch + sd * fs;
  out.m11_im = -sd * ch + cd * fs;
  out.c = c;
  const cplx m11(out.phi, out.m11_im);
  const cplx m12(c * sd, c * cd);
  out.m = {m11, m12, std::conj(m12), std::conj(m11)};
  return out;
}

AmplitudeTrace amplitude_trace(double e, const ModelParams& p, cplx a_out) {
  if (!(e > 0.0)) throw std::domain_error("amplitude_trace: need E > 0");
  if (a_out == cplx(0.0, 0.0))
    throw std::domain_error("amplitude_trace: need a_out != 0");
  const auto [dlt, lam, per] = cell_geometry(p);
  const double k = std::sqrt(e);
  const cplx z = std::sqrt(cplx(p.v - e, 0.0));
  if (std::abs(z) < 1e-12 * std::sqrt(std::max(1.0, p.v)))
    throw std::domain_error("amplitude_trace: E too close to V (z = 0)");
  const cplx ik(0.0, k);

  const Mat2C plane_to_barrier = mul(inv(t_mat(z, 0.0)), t_mat(ik, 0.0));
  const Mat2C barrier_to_plane = mul(inv(t_mat(ik, 0.0)), t_mat(z, 0.0));
  const Mat2C decay = delta_mat(-z, lam);

  AmplitudeTrace tr{e, p, k, z, {}, {}, {}};
  const unsigned n = p.n;
  tr.nodes.resize(2 * n);
  tr.plane_amps.assign(n + 1, {});
  tr.barrier_amps.assign(n, {});
  for (unsigned j = 1; j <= n; ++j) {
    tr.nodes[2 * j - 2] = (j - 1) * per;
    tr.nodes[2 * j - 1] = (j - 1) * per + lam;
  }

  tr.plane_amps[n] = {a_out, 0.0};
  for (unsigned j = n; j >= 1; --j) {
    const double x0 = tr.nodes[2 * j - 2];
    const double x1 = tr.nodes[2 * j - 1];
    const auto& [a2j, a2j1] = tr.plane_amps[j];

    // (B_{2j-1}, B_{2j}) from continuity at the barrier's right edge x1
    Mat2C into_barrier =
        mul(delta_mat(-z, x1), mul(plane_to_barrier, delta_mat(ik, x1)));
    tr.barrier_amps[j - 1] = {
        into_barrier.a11 * a2j + into_barrier.a12 * a2j1,
        into_barrier.a21 * a2j + into_barrier.a22 * a2j1};

    // Q_j in factored form: only z*lam appears in a real exponent
    Mat2C q = mul(delta_mat(-ik, x0),
                  mul(barrier_to_plane,
                      mul(decay, mul(plane_to_barrier, delta_mat(ik, x1)))));
    tr.plane_amps[j - 1] = {q.a11 * a2j + q.a12 * a2j1,
                           q.a21 * a2j + q.a22 * a2j1};
  }
  return tr;
}

namespace {

std::pair<cplx, cplx> eval_exp(cplx alpha, cplx c1, cplx c2, double x) {
  const cplx ep = std::exp(alpha * x);
  const cplx em = std::exp(-alpha * x);
  return {c1 * ep + c2 * em, alpha * (c1 * ep - c2 * em)};
}

}  // namespace

std::pair<cplx, cplx> AmplitudeTrace::eval_left(std::size_t node) const {
  const double x = nodes[node];
  const cplx ik(0.0, k);
  if (node % 2 == 0) {  // plane region to the left of barrier j = node/2 + 1
    const auto& [c1, c2] = plane_amps[node / 2];
    return eval_exp(ik, c1, c2, x);
  }
  const auto& [b1, b2] = barrier_amps[node / 2];  // barrier j = node/2 + 1
  return eval_exp(z, b1, b2, x);
}

std::pair<cplx, cplx> AmplitudeTrace::eval_right(std::size_t node) const {
  const double x = nodes[node];
  const cplx ik(0.0, k);
  if (node % 2 == 0) {
    const auto& [b1, b2] = barrier_amps[node / 2];
    return eval_exp(z, b1, b2, x);
  }
  const auto& [c1, c2] = plane_amps[node / 2 + 1];
  return eval_exp(ik, c1, c2, x);
}

double AmplitudeTrace::max_node_residual() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto [vl, dl] = eval_left(j);
    const auto [vr, dr] = eval_right(j);
    const double vs = std::max({std::abs(vl), std::abs(vr), 1e-300});
    const double ds = std::max({std::abs(dl), std::abs(dr), 1e-300});
    worst = std::max(worst, std::abs(vl - vr) / vs);
    worst = std::max(worst, std::abs(dl - dr) / ds);
  }
  return worst;
}

}  // namespace kp
