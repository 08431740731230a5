#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "kp/chebyshev.hpp"
#include "kp/transport.hpp"
#include "kp/units.hpp"

using namespace kp;

namespace {

const double v_ref = units::ev_to_model(0.5);

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = (double)x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("free lattice transmits perfectly") {
  for (unsigned n : {1u, 7u, 300u}) {
    const ModelParams p(0.0, 0.3, 25.0, n);
    for (double e : {0.1, 1.0, 9.0}) {
      const Transmission t = transmission_n(e, p);
      CHECK(t.s == 1.0);
      CHECK(t.log10_s == 0.0);
    }
  }
}

TEST_CASE("single barrier closed form") {
  const ModelParams p(4.0, 0.5, 3.0, 1);
  const double e = 1.7;
  const double lam = p.lambda();
  const double z2 = p.v - e;
  const double expected =
      1.0 / (1.0 + p.v * p.v / (4.0 * e * z2) *
                       std::pow(std::sinh(lam * std::sqrt(z2)), 2));
  CHECK(transmission_n(e, p).s == doctest::Approx(expected).epsilon(1e-12));

  // and against the amplitude ratio |A_2N|^2 / |A_0|^2
  const AmplitudeTrace tr = amplitude_trace(e, p, cplx(1.0));
  const double s_amp = 1.0 / std::norm(tr.plane_amps[0].first);
  CHECK(transmission_n(e, p).s == doctest::Approx(s_amp).epsilon(1e-11));
}

TEST_CASE("gap/band structure at reference parameters") {
  const ModelParams p(v_ref, 0.1, 500.0, 50);
  const double e_o = e_threshold(p);
  // deep in the gap between the low minibands
  const Transmission gap = transmission_n(0.6, p);
  CHECK(gap.log10_s < -3.0);
  CHECK(gap.s < 1e-3);
  // somewhere in the wide band above E_o transmission is O(1)
  double best = 0.0;
  for (int i = 0; i <= 2000; ++i)
    best = std::max(best,
                    transmission_n(1.5 * e_o + i * e_o / 500.0, p).s);
  CHECK(best >= 0.9);
  CHECK(best <= 1.0);
}

TEST_CASE("log-domain path in deep gaps") {
  const ModelParams p(v_ref, 0.1, 500.0, 500);
  const Transmission t = transmission_n(0.6, p);
  CHECK(t.s <= 1e-300);  // (sub)normal underflow on the linear scale
  CHECK(std::isfinite(t.log10_s));
  CHECK(t.log10_s < -300.0);
  const Resistivity r = resistivity_n(0.6, p);
  CHECK(std::isfinite(r.log10_rho));
  CHECK(r.log10_rho == doctest::Approx(-t.log10_s).epsilon(1e-9));
}

TEST_CASE("resonance means perfect transmission") {
  const ModelParams p(v_ref, 0.1, 500.0, 64);
  const double e_o = e_threshold(p);
  int found = 0;
  for (int i = 1; i <= 20000; ++i) {
    const double e = e_o + 2.0 * e_o * i / 20000.0;
    const Transmission t = transmission_n(e, p);
    if (t.resonance) {
      ++found;
      CHECK(std::fabs(t.s - 1.0) <= 1e-8);
    }
  }
  // resonances are isolated zeros, the grid is not expected to hit many
  CHECK(found >= 0);
}

TEST_CASE("continuum limit closed form") {
  const double gamma = 0.1, l = 500.0;
  const double e_o = e_threshold(gamma, v_ref);

  // sinc -> L at E = E_o
  CHECK(transmission_limit(e_o, gamma, v_ref, l).s ==
        doctest::Approx(1.0 / (1.0 + e_o * l * l / 4.0)).epsilon(1e-10));

  // sine zeros give S = 1
  for (int j = 1; j <= 5; ++j) {
    const double e = e_o + std::pow(j * M_PI / l, 2);
    const Transmission t = transmission_limit(e, gamma, v_ref, l);
    CHECK(std::fabs(t.s - 1.0) <= 1e-12);
  }

  // large finite chain as the oracle for the limit
  const double e = 2.0 * e_o;
  const double s_limit = transmission_limit(e, gamma, v_ref, l).s;
  const double s_fin =
      transmission_n(e, ModelParams(v_ref, gamma, l, 100000)).s;
  CHECK(std::fabs(s_limit - s_fin) <= 2e-3);
}

TEST_CASE("resistivity definition and limit identity") {
  // rho = (1-S)/S
  const ModelParams p(0.0, 0.3, 25.0, 10);
  CHECK(resistivity_n(1.0, p).rho == 0.0);

  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ue(0.1, 3.0), ug(0.05, 2.0),
      uv(0.5, 15.0), ul(5.0, 100.0);
  for (int i = 0; i < 300; ++i) {
    const double gamma = ug(rng), v = uv(rng), l = ul(rng);
    const double e_o = e_threshold(gamma, v);
    const double e = ue(rng) * std::max(e_o, 0.1);
    const Transmission s = transmission_limit(e, gamma, v, l);
    const Resistivity r = resistivity_limit(e, gamma, v, l);
    // near S = 1 the subtraction 1 - S loses digits, hence the absolute floor
    if (s.s > 1e-12 && s.s < 1.0 - 1e-12)
      CHECK(std::fabs(r.rho - (1.0 - s.s) / s.s) <= 1e-9 * r.rho + 1e-13);

    // direct evaluation of the limit resistivity formula
    const double d = e - e_o;
    if (std::fabs(d) > 1e-4 && d > 0.0) {
      const double g = std::sin(l * std::sqrt(d)) / std::sqrt(d);
      const double rho_direct =
          (v * gamma) * (v * gamma) /
          ((1.0 + gamma) * (1.0 + gamma) * 4.0 * e) * g * g;
      CHECK(std::fabs(r.rho - rho_direct) <=
            1e-10 * std::max(1.0, rho_direct));
    }
  }
}

TEST_CASE("pointwise convergence S_N -> S_bar") {
  const double gamma = 0.1, l = 500.0;
  const double e_o = e_threshold(gamma, v_ref);
  for (double f : {3.0, 10.0}) {
    const double e = f * e_o;
    const double sbar = transmission_limit(e, gamma, v_ref, l).s;
    double prev = 1e300;
    for (unsigned n : {2000u, 4000u, 8000u}) {
      const double err =
          std::fabs(transmission_n(e, ModelParams(v_ref, gamma, l, n)).s -
                    sbar);
      CHECK(err <= 0.85 * prev);
      prev = err;
    }
  }
}

TEST_CASE("gap decay: log rho_bar linear in L below E_o") {
  const double gamma = 0.1;
  const double e_o = e_threshold(gamma, v_ref);
  const double e = 0.5 * e_o;
  std::vector<double> ls, lnrho;
  for (double l = 200.0; l <= 800.0; l += 25.0) {
    ls.push_back(l);
    lnrho.push_back(resistivity_limit(e, gamma, v_ref, l).log10_rho *
                    std::log(10.0));
  }
  const double slope = fit_slope(ls, lnrho);
  const double expected = 2.0 * std::sqrt(e_o - e);
  CHECK(std::fabs(slope - expected) <= 0.05 * expected);
}

TEST_CASE("critical scaling: rho_bar ~ L^2 at E = E_o") {
  const double gamma = 0.1;
  const double e_o = e_threshold(gamma, v_ref);
  std::vector<double> lnl, lnrho;
  for (double l = 200.0; l <= 800.0; l += 25.0) {
    lnl.push_back(std::log(l));
    lnrho.push_back(resistivity_limit(e_o, gamma, v_ref, l).log10_rho *
                    std::log(10.0));
  }
  const double expo = fit_slope(lnl, lnrho);
  CHECK(std::fabs(expo - 2.0) <= 0.02);
}

TEST_CASE("two-path equality S_N vs 1/|(M^N)_11|^2") {
  const ModelParams base(v_ref, 0.1, 500.0, 1);
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> ue(0.3, 2.0);
  const double e_o = e_threshold(base);

  // in and around the bands, N <= 64
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + (unsigned)(rng() % 64);
    const ModelParams p(v_ref, 0.1, 500.0, n);
    const double e = ue(rng) * e_o + e_o;
    const PhiKernel kern = phi_kernel(e, p);
    if (std::fabs(kern.phi) > 2.0) continue;  // keep M^N representable
    const double s_direct =
        1.0 / std::norm(mat_power_direct(kern.m, n).a11);
    const double s = transmission_n(e, p).s;
    CHECK(std::fabs(s - s_direct) <= 1e-9 * std::max(s, s_direct));
  }

  // inside gaps, compare on log10_s up to N = 512
  int tested = 0;
  for (int i = 0; i < 4000 && tested < 40; ++i) {
    const double e = 0.2 * e_o + 1.8 * e_o * i / 4000.0;
    const ModelParams p(v_ref, 0.1, 500.0, 512);
    const PhiKernel kern = phi_kernel(e, p);
    if (kern.phi <= 1.02 || kern.phi > 1.2) continue;  // shallow gap only
    ++tested;
    const double log10_direct =
        -std::log10(std::norm(mat_power_direct(kern.m, 512).a11));
    const double log10_s = transmission_n(e, p).log10_s;
    CHECK(std::fabs(log10_s - log10_direct) <=
          1e-6 * std::max(1.0, std::fabs(log10_direct)));
  }
  CHECK(tested > 0);
}
