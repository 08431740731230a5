#include "kp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kp {

namespace {

using PhiFn = std::function<double(double)>;

// Bisect g(E) = |phi(E)| - 1 on a bracket with a sign change.
double refine_edge(const PhiFn& phi, double lo, double hi, double g_lo) {
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = std::fabs(phi(mid)) - 1.0;
    if ((g_lo <= 0.0) == (g_mid <= 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> scan_edges(const PhiFn& phi, double e_max,
                               std::size_t npts) {
  std::vector<double> edges;
  const double h = e_max / (double)npts;
  double e_prev = h;
  double g_prev = std::fabs(phi(e_prev)) - 1.0;
  for (std::size_t i = 2; i <= npts; ++i) {
    const double e = (double)i * h;
    const double g = std::fabs(phi(e)) - 1.0;
    if ((g_prev <= 0.0) != (g <= 0.0))
      edges.push_back(refine_edge(phi, e_prev, e, g_prev));
    e_prev = e;
    g_prev = g;
  }
  return edges;
}

BandStructure structure_from_scan(const PhiFn& phi, double e_max,
                                  std::size_t npts, unsigned n_cells,
                                  double period) {
  npts = std::min<std::size_t>(npts, 50'000'000);
  std::vector<double> edges = scan_edges(phi, e_max, npts);
  std::vector<double> edges2 = scan_edges(phi, e_max, 2 * npts);
  if (edges2.size() != edges.size()) {
    edges = std::move(edges2);
    edges2 = scan_edges(phi, e_max, 4 * npts);
    if (edges2.size() != edges.size())
      throw std::runtime_error(
          "band_edges: unresolved edges after two grid refinements");
  }
  edges = std::move(edges2);

  BandStructure bs{n_cells, period, {}, {}};
  double lo = 0.0;
  int band_idx = 0;
  for (std::size_t i = 0; i <= edges.size(); ++i) {
    const double hi = (i < edges.size()) ? edges[i] : e_max;
    if (hi <= lo) continue;
    const double e_mid = (lo > 0.0) ? 0.5 * (lo + hi)
                                    : std::min(0.5 * hi, 0.999 * hi);
    if (std::fabs(phi(e_mid)) <= 1.0) {
      bs.bands.push_back({++band_idx, lo, hi, {}, {}});
    } else {
      bs.gaps.push_back({lo, hi});
    }
    lo = hi;
  }
  return bs;
}

double solve_in_band(const PhiFn& phi, const Band& band, double target) {
  double lo = band.e_lo, hi = band.e_hi;
  double f_lo = phi(lo) - target;
  double f_hi = phi(hi) - target;
  if (f_lo * f_hi > 0.0) {
    // the target can sit just outside the refined edge values
    if (std::fabs(f_lo) <= 1e-8) return lo;
    if (std::fabs(f_hi) <= 1e-8) return hi;
    throw std::runtime_error(
        "band_solve: bracket failure (Phi not monotone across the band?)");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-11; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = phi(mid) - target;
    if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void fill_samples(const PhiFn& phi, BandStructure& bs, int xi_steps) {
  if (xi_steps < 2) throw std::domain_error("band_structure: xi_steps >= 2");
  const double xi_max = M_PI / bs.period;
  for (Band& band : bs.bands) {
    // A band cut off by the scan window does not span the full xi range;
    // leave it unsampled instead of failing on unreachable targets.
    const double lo = band.e_lo > 0.0 ? band.e_lo : 1e-12 * band.e_hi;
    if (std::fabs(phi(lo)) < 1.0 - 1e-6 ||
        std::fabs(phi(band.e_hi)) < 1.0 - 1e-6)
      continue;
    band.xi.resize(xi_steps);
    band.e.resize(xi_steps);
    for (int i = 0; i < xi_steps; ++i) {
      const double xi = xi_max * (double)i / (double)(xi_steps - 1);
      band.xi[i] = xi;
      band.e[i] = solve_in_band(phi, band, std::cos(xi * bs.period));
    }
  }
}

PhiFn kp_phi(const ModelParams& p) {
  return [p](double e) { return phi_kernel(e, p).phi; };
}

std::size_t kp_grid_points(const ModelParams& p, double e_max) {
  const double vref = std::max(p.v, 1e-3);
  return (std::size_t)std::max(4096.0, 64.0 * p.n * (e_max / vref + 1.0));
}

}  // namespace

BandStructure band_edges(const ModelParams& p, double e_max) {
  if (!(e_max > 0.0)) throw std::domain_error("band_edges: need e_max > 0");
  return structure_from_scan(kp_phi(p), e_max, kp_grid_points(p, e_max), p.n,
                             p.period());
}

double band_solve(const ModelParams& p, const BandStructure& bs,
                  int band_index, double xi) {
  if (band_index < 1 || (std::size_t)band_index > bs.bands.size())
    throw std::domain_error("band_solve: band_index out of range");
  if (!(xi >= 0.0) || xi > M_PI / bs.period * (1.0 + 1e-12))
    throw std::domain_error("band_solve: xi outside [0, pi/p_N]");
  return solve_in_band(kp_phi(p), bs.bands[band_index - 1],
                       std::cos(xi * bs.period));
}

double band_solve(const ModelParams& p, int band_index, double xi) {
  // grow e_max until the requested band is bracketed
  double e_max = std::max(4.0 * p.v, 10.0);
  for (int round = 0; round < 12; ++round) {
    BandStructure bs = band_edges(p, e_max);
    if ((std::size_t)band_index <= bs.bands.size())
      return band_solve(p, bs, band_index, xi);
    e_max *= 4.0;
  }
  throw std::runtime_error("band_solve: band_index beyond reachable e_max");
}

BandStructure band_structure(const ModelParams& p, double e_max,
                             int xi_steps) {
  BandStructure bs = band_edges(p, e_max);
  fill_samples(kp_phi(p), bs, xi_steps);
  return bs;
}

double continuum_dispersion(double xi, double e_o) { return e_o + xi * xi; }

double dirac_comb_lhs(double k, const DiracCombParams& d) {
  if (!(k >= 0.0)) throw std::domain_error("dirac_comb_lhs: need k >= 0");
  const double kd = k * d.delta;
  const double sinc = (std::fabs(kd) < 1e-8) ? 1.0 - kd * kd / 6.0
                                             : std::sin(kd) / kd;
  return d.p_strength() * sinc + std::cos(kd);
}

BandStructure dirac_comb_bands(const DiracCombParams& d, double e_max,
                               int xi_steps) {
  if (!(d.delta > 0.0))
    throw std::domain_error("dirac_comb_bands: need delta > 0");
  if (!(d.p_strength() >= 0.0))
    throw std::domain_error("dirac_comb_bands: need P >= 0");
  const PhiFn phi = [d](double e) { return dirac_comb_lhs(std::sqrt(e), d); };
  const double n_bands = std::sqrt(e_max) * d.delta / M_PI + 2.0;
  const auto npts = (std::size_t)std::max(8192.0, 1024.0 * n_bands);
  BandStructure bs = structure_from_scan(phi, e_max, npts, 0, d.delta);
  fill_samples(phi, bs, xi_steps);
  return bs;
}

}  // namespace kp
