#include "kp/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "kp/transport.hpp"
#include "kp/units.hpp"

namespace kp {

std::string format_cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void SweepTable::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << format_cell(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }
}

namespace {

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw std::domain_error("sweep: need steps >= 1");
  if (!(hi > lo)) throw std::domain_error("sweep: need max > min");
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i)
    g[i] = (steps == 1) ? lo : lo + (hi - lo) * (double)i / (double)(steps - 1);
  return g;
}

SweepTable bands_table(const BandStructure& bs, double e_o, int max_bands) {
  SweepTable t;
  t.header = {"band_index", "xi", "E_model", "E_eV", "E_continuum"};
  for (const Band& b : bs.bands) {
    if (max_bands > 0 && b.index > max_bands) break;
    for (std::size_t i = 0; i < b.xi.size(); ++i)
      t.rows.push_back({(double)b.index, b.xi[i], b.e[i],
                        units::model_to_ev(b.e[i]),
                        continuum_dispersion(b.xi[i], e_o)});
  }
  return t;
}

}  // namespace

SweepTable transmit_sweep(double v, double gamma, double l,
                          const std::vector<unsigned>& ns, double e_min,
                          double e_max, int steps) {
  if (ns.empty()) throw std::domain_error("transmit_sweep: need at least one N");
  if (!(e_min > 0.0)) throw std::domain_error("transmit_sweep: need E_min > 0");
  SweepTable t;
  t.header = {"E_eV", "E_model"};
  for (unsigned n : ns) {
    t.header.push_back("S_N" + std::to_string(n));
    t.header.push_back("log10_S_N" + std::to_string(n));
  }
  t.header.push_back("S_bar");
  for (double e : linspace(e_min, e_max, steps)) {
    std::vector<double> row = {units::model_to_ev(e), e};
    for (unsigned n : ns) {
      const Transmission s = transmission_n(e, ModelParams(v, gamma, l, n));
      row.push_back(s.s);
      row.push_back(s.log10_s);
    }
    row.push_back(transmission_limit(e, gamma, v, l).s);
    t.rows.push_back(std::move(row));
  }
  return t;
}

SweepTable bands_sweep(const ModelParams& p, double e_max, int xi_steps,
                       int max_bands) {
  return bands_table(band_structure(p, e_max, xi_steps), e_threshold(p),
                     max_bands);
}

SweepTable resist_energy_sweep(double v, double gamma, double l, unsigned n,
                               double e_min, double e_max, int steps) {
  if (!(e_min > 0.0))
    throw std::domain_error("resist_energy_sweep: need E_min > 0");
  const ModelParams p(v, gamma, l, n);
  SweepTable t;
  t.header = {"E_eV",  "E_model",  "S_N",       "rho_N",
              "log10_rho_N", "S_bar", "rho_bar", "log10_rho_bar"};
  for (double e : linspace(e_min, e_max, steps)) {
    const Transmission sn = transmission_n(e, p);
    const Resistivity rn = resistivity_n(e, p);
    const Transmission sb = transmission_limit(e, gamma, v, l);
    const Resistivity rb = resistivity_limit(e, gamma, v, l);
    t.rows.push_back({units::model_to_ev(e), e, sn.s, rn.rho, rn.log10_rho,
                      sb.s, rb.rho, rb.log10_rho});
  }
  return t;
}

SweepTable resist_length_sweep(double v, double gamma, double e, unsigned n,
                               double l_min, double l_max, int steps) {
  if (!(e > 0.0)) throw std::domain_error("resist_length_sweep: need E > 0");
  if (!(l_min > 0.0))
    throw std::domain_error("resist_length_sweep: need L_min > 0");
  SweepTable t;
  t.header = {"L_nm",  "L_model",  "S_N",       "rho_N",
              "log10_rho_N", "S_bar", "rho_bar", "log10_rho_bar"};
  for (double l : linspace(l_min, l_max, steps)) {
    const ModelParams p(v, gamma, l, n);
    const Transmission sn = transmission_n(e, p);
    const Resistivity rn = resistivity_n(e, p);
    const Transmission sb = transmission_limit(e, gamma, v, l);
    const Resistivity rb = resistivity_limit(e, gamma, v, l);
    t.rows.push_back({units::model_to_nm(l), l, sn.s, rn.rho, rn.log10_rho,
                      sb.s, rb.rho, rb.log10_rho});
  }
  return t;
}

SweepTable comb_sweep(const DiracCombParams& d, double e_max, int xi_steps,
                      int max_bands) {
  return bands_table(dirac_comb_bands(d, e_max, xi_steps), 0.0, max_bands);
}

}  // namespace kp
