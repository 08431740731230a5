#include "kp/transport.hpp"

#include <cmath>
#include <limits>

#include "kp/chebyshev.hpp"

namespace kp {

namespace {

const double neg_inf = -std::numeric_limits<double>::infinity();
const double ln10 = std::log(10.0);

// Build S = 1/(1 + t^2) from log10|t|, never forming t^2 in linear scale
// when it would overflow.
Transmission from_log10_t(double log10_t, bool resonance) {
  if (log10_t == neg_inf) return {1.0, 0.0, resonance};
  if (2.0 * log10_t < 290.0) {
    const double t2 = std::pow(10.0, 2.0 * log10_t);
    const double log10_s = -std::log1p(t2) / ln10;
    return {1.0 / (1.0 + t2), log10_s, resonance};
  }
  // correction log10(1 + 10^{-2 log10 t}) is below 1e-290 here
  const double log10_s = -2.0 * log10_t;
  return {std::pow(10.0, log10_s), log10_s, resonance};
}

// log10|c U_{N-1}(Phi)| for the finite chain; -inf when t = 0.
double log10_t_finite(double e, const ModelParams& p, bool* resonance) {
  const PhiKernel kern = phi_kernel(e, p);
  const ChebValue u = cheb_u((long)p.n - 1, kern.phi);
  *resonance = (u.sign == 0) ||
               (std::isfinite(u.value) &&
                std::fabs(u.value) <= 1e-12 * (double)p.n);
  if (kern.c == 0.0 || u.sign == 0) return neg_inf;
  return std::log10(std::fabs(kern.c)) + u.log_abs / ln10;
}

// log10|t| for the continuum limit, t = (E_o / 2 sqrt(E)) g(E) with
// g = sin(L sqrt(E-E_o))/sqrt(E-E_o) continued through E = E_o.
double log10_t_limit(double e, double gamma, double v, double l,
                     bool* resonance) {
  if (!(e > 0.0)) throw std::domain_error("transmission_limit: need E > 0");
  const double e_o = e_threshold(gamma, v);
  const double d = e - e_o;
  const double eps_c = 1e-8 * std::max(1.0, e_o);
  const double pre = e_o / (2.0 * std::sqrt(e));
  *resonance = false;
  if (e_o == 0.0) return neg_inf;

  double log10_g;
  if (std::fabs(d) <= eps_c) {
    log10_g = std::log10(l * (1.0 - d * l * l / 6.0));
  } else if (d > 0.0) {
    const double q = std::sqrt(d);
    const double g = std::sin(l * q) / q;
    if (g == 0.0) {
      *resonance = true;
      return neg_inf;
    }
    *resonance = std::fabs(g) <= 1e-12 * l;
    return std::log10(pre) + std::log10(std::fabs(g));
  } else {
    const double q = std::sqrt(-d);
    const double lq = l * q;
    // ln sinh(lq) = lq + ln(1 - e^{-2 lq}) - ln 2
    const double ln_g =
        lq + std::log1p(-std::exp(-2.0 * lq)) - std::log(2.0 * q);
    log10_g = ln_g / ln10;
  }
  return std::log10(pre) + log10_g;
}

Resistivity rho_from_log10_t(double log10_t) {
  if (log10_t == neg_inf) return {0.0, neg_inf};
  const double log10_rho = 2.0 * log10_t;
  return {std::pow(10.0, log10_rho), log10_rho};
}

}  // namespace

Transmission transmission_n(double e, const ModelParams& p) {
  bool res = false;
  const double lt = log10_t_finite(e, p, &res);
  return from_log10_t(lt, res);
}

Transmission transmission_limit(double e, double gamma, double v, double l) {
  bool res = false;
  const double lt = log10_t_limit(e, gamma, v, l, &res);
  return from_log10_t(lt, res);
}

Resistivity resistivity_n(double e, const ModelParams& p) {
  bool res = false;
  return rho_from_log10_t(log10_t_finite(e, p, &res));
}

Resistivity resistivity_limit(double e, double gamma, double v, double l) {
  bool res = false;
  return rho_from_log10_t(log10_t_limit(e, gamma, v, l, &res));
}

}  // namespace kp
