#ifndef KP_TRANSPORT_HPP
#define KP_TRANSPORT_HPP

#include "kp/kernel.hpp"

// Transmission coefficient of the N-cell chain,
//   S_N = [1 + (c U_{N-1}(Phi))^2]^{-1},
// its continuum limit S-bar, and the Landauer resistivity rho = (1-S)/S.
// Inside band gaps U_{N-1} grows exponentially, so every quantity also
// carries a log10 that stays finite after the linear-scale value underflows.

namespace kp {

struct Transmission {
  double s;        // in [0, 1]; 0 once the true value underflows
  double log10_s;  // finite whenever E is in the domain
  bool resonance;  // U_{N-1}(Phi) = 0 to tolerance: perfect transmission
};

struct Resistivity {
  double rho;        // (1-S)/S; +inf once it overflows
  double log10_rho;  // -inf at S = 1
};

Transmission transmission_n(double e, const ModelParams& p);

// N -> infinity limit at fixed gamma, V, L (the lattice becomes a uniform
// barrier of height E_o = gamma V / (1+gamma)).
Transmission transmission_limit(double e, double gamma, double v, double l);

Resistivity resistivity_n(double e, const ModelParams& p);
Resistivity resistivity_limit(double e, double gamma, double v, double l);

}  // namespace kp

#endif  // KP_TRANSPORT_HPP
