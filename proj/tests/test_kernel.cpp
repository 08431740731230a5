#include <doctest.h>

#include <cmath>
#include <random>

#include "kp/kernel.hpp"
#include "kp/units.hpp"

using namespace kp;

namespace {

// Single-cell matrix assembled directly from the factored transfer-matrix
// product; independent oracle for the explicit real-entry evaluation.
Mat2C assemble_m(double e, const ModelParams& p) {
  const auto [dlt, lam, per] = cell_geometry(p);
  const cplx ik(0.0, std::sqrt(e));
  const cplx z = std::sqrt(cplx(p.v - e, 0.0));
  return mul(delta_mat(-ik, dlt),
             mul(inv(t_mat(ik, 0.0)),
                 mul(t_mat(z, 0.0),
                     mul(delta_mat(-z, lam),
                         mul(inv(t_mat(z, 0.0)), t_mat(ik, 0.0))))));
}

double entry_dist(const Mat2C& a, const Mat2C& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12),
                   std::abs(a.a21 - b.a21), std::abs(a.a22 - b.a22)});
}

const double v_ref = units::ev_to_model(0.5);

}  // namespace

TEST_CASE("cell geometry") {
  const CellGeometry g = cell_geometry(ModelParams(1.0, 0.1, 500.0, 100));
  CHECK(g.delta == doctest::Approx(50.0 / 11.0).epsilon(1e-14));
  CHECK(g.lambda == doctest::Approx(5.0 / 11.0).epsilon(1e-14));
  CHECK(g.period == doctest::Approx(5.0).epsilon(1e-14));

  const CellGeometry g0 = cell_geometry(ModelParams(1.0, 0.0, 10.0, 5));
  CHECK(g0.delta == 2.0);
  CHECK(g0.lambda == 0.0);

  const CellGeometry g1 = cell_geometry(ModelParams(1.0, 1.0, 8.0, 4));
  CHECK(g1.delta == 1.0);
  CHECK(g1.lambda == 1.0);
  CHECK(g1.period == 2.0);

  // N (delta + lambda) = L
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p(1.0, u(rng), 10.0 * u(rng), 1 + (unsigned)(rng() % 500));
    const CellGeometry gg = cell_geometry(p);
    CHECK(std::fabs(p.n * (gg.delta + gg.lambda) - p.l) <= 1e-12 * p.l);
  }

  CHECK_THROWS_AS(ModelParams(-1.0, 0.1, 10.0, 5), std::domain_error);
  CHECK_THROWS_AS(ModelParams(1.0, 0.1, 0.0, 5), std::domain_error);
}

TEST_CASE("e_threshold") {
  CHECK(e_threshold(0.1, v_ref) ==
        doctest::Approx(1.1961722488038277).epsilon(1e-12));
  CHECK(e_threshold(0.0, 7.0) == 0.0);
  CHECK(e_threshold(1e9, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e_threshold(ModelParams(v_ref, 0.1, 500.0, 100)) ==
        doctest::Approx(1.1961722488038277).epsilon(1e-12));
}

TEST_CASE("phi_kernel free particle") {
  const ModelParams p(0.0, 0.5, 12.0, 4);
  for (double e : {0.3, 1.0, 4.7}) {
    const PhiKernel kern = phi_kernel(e, p);
    const double k = std::sqrt(e);
    CHECK(kern.phi ==
          doctest::Approx(std::cos(k * p.period())).epsilon(1e-13));
    CHECK(std::fabs(kern.c) <= 1e-15);
  }
  CHECK_THROWS_AS(phi_kernel(0.0, p), std::domain_error);
  CHECK_THROWS_AS(phi_kernel(-1.0, p), std::domain_error);
}

TEST_CASE("phi_kernel at E = V") {
  const ModelParams p(2.0, 0.3, 20.0, 8);
  const double k = std::sqrt(p.v);
  const auto [dlt, lam, per] = cell_geometry(p);
  const PhiKernel kern = phi_kernel(p.v, p);
  CHECK(kern.phi == doctest::Approx(std::cos(k * dlt) -
                                    (k * lam / 2.0) * std::sin(k * dlt))
                        .epsilon(1e-10));
  CHECK(kern.c == doctest::Approx(p.v * lam / (2.0 * k)).epsilon(1e-10));
}

TEST_CASE("phi_kernel matches the matrix-product assembly") {
  const ModelParams p(v_ref, 0.1, 500.0, 100);
  const PhiKernel kern = phi_kernel(2.0, p);
  CHECK(entry_dist(kern.m, assemble_m(2.0, p)) <= 1e-12);
  CHECK(kern.phi == kern.m.a11.real());
  CHECK(kern.m11_im == kern.m.a11.imag());

  // both sides of the barrier and across random parameters
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uv(0.5, 15.0), ug(0.05, 2.0),
      ul(2.0, 40.0), ue(0.05, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams q(uv(rng), ug(rng), ul(rng),
                        1 + (unsigned)(rng() % 200));
    const double e = ue(rng) * q.v;
    if (std::fabs(e - q.v) < 1e-6 * q.v) continue;
    const PhiKernel kk = phi_kernel(e, q);
    // deep tunneling cells have entries ~ e^{z lambda}; scale accordingly
    const double norm =
        std::max({std::abs(kk.m.a11), std::abs(kk.m.a12), 1.0});
    CHECK(std::abs(det(kk.m) - cplx(1.0)) <= 1e-12 * norm * norm);
    CHECK(kk.m.a22 == std::conj(kk.m.a11));
    CHECK(kk.m.a21 == std::conj(kk.m.a12));
    const Mat2C ref = assemble_m(e, q);
    CHECK(entry_dist(kk.m, ref) <= 1e-10 * norm);
  }
}

TEST_CASE("phi_kernel branch continuity across E = V") {
  const ModelParams p(v_ref, 0.1, 500.0, 50);
  const double eps = 1e-6;
  CHECK(std::fabs(phi_kernel(p.v - eps, p).phi -
                  phi_kernel(p.v + eps, p).phi) <= 10.0 * eps);
  CHECK(std::fabs(phi_kernel(p.v - eps, p).c -
                  phi_kernel(p.v + eps, p).c) <= 10.0 * eps);
}

TEST_CASE("1 - Phi_N approaches (E - E_o) L^2 / 2N^2") {
  const double gamma = 0.1, l = 500.0;
  const double e_o = e_threshold(gamma, v_ref);
  const double e = 2.0 * e_o;
  const double lead = (e - e_o) * l * l / 2.0;
  double prev_err = 1e300;
  for (unsigned n : {1000u, 10000u, 100000u}) {
    const double phi = phi_kernel(e, ModelParams(v_ref, gamma, l, n)).phi;
    const double err = std::fabs((double)n * n * (1.0 - phi) / lead - 1.0);
    CHECK(err < 0.02 * prev_err);  // ~1/N^2 fall per decade of N
    prev_err = err;
  }
}

TEST_CASE("amplitude_trace free particle") {
  const ModelParams p(0.0, 0.4, 14.0, 7);
  const cplx a_out(0.8, -0.6);
  const AmplitudeTrace tr = amplitude_trace(1.3, p, a_out);
  for (const auto& [a_fwd, a_bwd] : tr.plane_amps) {
    CHECK(std::abs(std::abs(a_fwd) - std::abs(a_out)) <= 1e-12);
    CHECK(std::abs(a_bwd) <= 1e-12);
  }
}

TEST_CASE("amplitude_trace single barrier matches the closed form") {
  const ModelParams p(4.0, 0.5, 3.0, 1);
  const double e = 1.7;  // below the barrier
  const AmplitudeTrace tr = amplitude_trace(e, p, cplx(1.0));
  const double ratio = std::norm(tr.plane_amps[0].first);  // |A0|^2/|A2|^2
  const double lam = p.lambda();
  const double z2 = p.v - e;
  const double s1 = 1.0 / (1.0 + p.v * p.v / (4.0 * e * z2) *
                               std::pow(std::sinh(lam * std::sqrt(z2)), 2));
  CHECK(1.0 / ratio == doctest::Approx(s1).epsilon(1e-12));
}

TEST_CASE("amplitude_trace continuity at every node") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> uv(0.5, 10.0), ug(0.05, 1.5),
      ul(2.0, 25.0), ue(0.05, 2.0);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p(uv(rng), ug(rng), ul(rng), 1 + (unsigned)(rng() % 32));
    const double e = ue(rng) * p.v;
    if (std::fabs(e - p.v) < 1e-6 * p.v) continue;
    CHECK(amplitude_trace(e, p, cplx(0.3, 1.1)).max_node_residual() <= 1e-9);
  }
  CHECK_THROWS_AS(amplitude_trace(1.0, ModelParams(1.0, 0.5, 4.0, 2), cplx(0.0)),
                  std::domain_error);
}
