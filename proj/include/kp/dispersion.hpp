#ifndef KP_DISPERSION_HPP
#define KP_DISPERSION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "kp/kernel.hpp"

// Band structure from the dispersion relation cos(xi p_N) = Phi(E):
// allowed bands are the energy intervals with |Phi| <= 1, band gaps the
// intervals with |Phi| > 1.  The same bracketing/bisection machinery also
// serves the Dirac-comb reference model P sinc(k d) + cos(k d) = cos(xi d).

namespace kp {

struct Band {
  int index;        // 1-based
  double e_lo, e_hi;
  std::vector<double> xi;  // Bloch wavevector samples over [0, pi/period]
  std::vector<double> e;   // solved energies, same length as xi
};

struct BandStructure {
  unsigned n_cells;  // 0 for the Dirac-comb model
  double period;     // p_N (or delta for the comb)
  std::vector<Band> bands;                       // samples empty until filled
  std::vector<std::pair<double, double>> gaps;   // (E_lo, E_hi), |Phi| > 1
};

// Edge location only: scans Phi on a grid, brackets every crossing of
// |Phi| = 1 and refines by bisection.  Throws std::runtime_error when two
// edges stay unresolved after two grid refinement rounds.
BandStructure band_edges(const ModelParams& p, double e_max);

// Solve Phi(E) = cos(xi * p_N) inside the given band by bisection.
// Throws std::runtime_error on a bracket failure (non-monotone Phi).
double band_solve(const ModelParams& p, const BandStructure& bs,
                  int band_index, double xi);
double band_solve(const ModelParams& p, int band_index, double xi);

// Edges plus per-band (xi, E) sample grids.
BandStructure band_structure(const ModelParams& p, double e_max,
                             int xi_steps = 129);

// E(xi) = E_o + xi^2
double continuum_dispersion(double xi, double e_o);

struct DiracCombParams {
  double delta;       // well spacing
  double lambda_cap;  // delta-peak intensity Lambda = lim V*lambda
  double p_strength() const { return lambda_cap * delta / 2.0; }

  static DiracCombParams from_strength(double p, double delta) {
    return {delta, 2.0 * p / delta};
  }
};

// P sin(k d)/(k d) + cos(k d); plays the role of Phi for the comb model.
double dirac_comb_lhs(double k, const DiracCombParams& d);

BandStructure dirac_comb_bands(const DiracCombParams& d, double e_max,
                               int xi_steps = 129);

}  // namespace kp

#endif  // KP_DISPERSION_HPP
