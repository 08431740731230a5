#ifndef KP_UNITS_HPP
#define KP_UNITS_HPP

// Laboratory <-> model unit conversion.  Lengths are measured in nanometers
// and energies in quanta of 0.038 eV, which makes hbar^2/2m = 1 so every
// formula in the core library is dimensionless.

namespace kp::units {

inline constexpr double energy_quantum_ev = 0.038;  // eV per model energy unit
inline constexpr double length_unit_nm = 1.0;       // nm per model length unit

inline double ev_to_model(double e_ev) { return e_ev / energy_quantum_ev; }
inline double model_to_ev(double e_model) { return e_model * energy_quantum_ev; }

inline double nm_to_model(double x_nm) { return x_nm / length_unit_nm; }
inline double model_to_nm(double x_model) { return x_model * length_unit_nm; }

}  // namespace kp::units

#endif  // KP_UNITS_HPP
