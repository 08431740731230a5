#ifndef KP_SWEEP_HPP
#define KP_SWEEP_HPP

#include <ostream>
#include <string>
#include <vector>

#include "kp/dispersion.hpp"
#include "kp/kernel.hpp"

// CSV-serializable sweep grids backing the CLI subcommands.  Numbers are
// written with 17 significant digits so a round-trip through text is exact
// for doubles; underflowed logs appear as the sentinel "-inf".

namespace kp {

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  void write_csv(std::ostream& os) const;
};

std::string format_cell(double v);

// Columns: E_eV, E_model, then S_N<k>, log10_S_N<k> per requested N, then
// S_bar.  All N values share one energy grid.
SweepTable transmit_sweep(double v, double gamma, double l,
                          const std::vector<unsigned>& ns, double e_min,
                          double e_max, int steps);

// Columns: band_index, xi, E_model, E_eV, E_continuum.
SweepTable bands_sweep(const ModelParams& p, double e_max, int xi_steps,
                       int max_bands);

// Resistivity vs energy at fixed geometry.
SweepTable resist_energy_sweep(double v, double gamma, double l, unsigned n,
                               double e_min, double e_max, int steps);

// Resistivity vs length at fixed energy (L-scaling studies).
SweepTable resist_length_sweep(double v, double gamma, double e, unsigned n,
                               double l_min, double l_max, int steps);

// Dirac-comb band structure, same columns as bands_sweep with the free
// parabola xi^2 as the continuum reference.
SweepTable comb_sweep(const DiracCombParams& d, double e_max, int xi_steps,
                      int max_bands);

}  // namespace kp

#endif  // KP_SWEEP_HPP
