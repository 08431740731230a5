"""Finite Kronig-Penney chain: transmission, resistivity and band structure.

Thin re-export of the C++ extension module.  Energies and lengths are in
model units (0.038 eV / 1 nm per unit) unless converted explicitly with
ev_to_model / model_to_ev.
"""

from ._core import (  # noqa: F401
    ENERGY_QUANTUM_EV,
    Band,
    BandStructure,
    ChebValue,
    DiracCombParams,
    ModelParams,
    PhiKernel,
    Resistivity,
    Transmission,
    amplitude_residual,
    band_edges,
    band_solve,
    band_structure,
    cheb_u,
    continuum_dispersion,
    dirac_comb_bands,
    dirac_comb_lhs,
    e_threshold,
    ev_to_model,
    model_to_ev,
    phi_kernel,
    resistivity_limit,
    resistivity_n,
    selfcheck,
    transmission_limit,
    transmission_n,
)

__all__ = [name for name in dir() if not name.startswith("_")]
