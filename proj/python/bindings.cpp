#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kp/chebyshev.hpp"
#include "kp/dispersion.hpp"
#include "kp/kernel.hpp"
#include "kp/mat2.hpp"
#include "kp/selfcheck.hpp"
#include "kp/transport.hpp"
#include "kp/units.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Kronig-Penney chain: transmission, resistivity, bands";

  m.def("ev_to_model", &kp::units::ev_to_model, py::arg("e_ev"));
  m.def("model_to_ev", &kp::units::model_to_ev, py::arg("e_model"));
  m.attr("ENERGY_QUANTUM_EV") = kp::units::energy_quantum_ev;

  py::class_<kp::ModelParams>(m, "ModelParams")
      .def(py::init<double, double, double, unsigned>(), py::arg("v"),
           py::arg("gamma"), py::arg("l"), py::arg("n"))
      .def_readonly("v", &kp::ModelParams::v)
      .def_readonly("gamma", &kp::ModelParams::gamma)
      .def_readonly("l", &kp::ModelParams::l)
      .def_readonly("n", &kp::ModelParams::n)
      .def_property_readonly("delta", &kp::ModelParams::delta)
      .def_property_readonly("lam", &kp::ModelParams::lambda)
      .def_property_readonly("period", &kp::ModelParams::period);

  m.def("e_threshold",
        py::overload_cast<const kp::ModelParams&>(&kp::e_threshold));
  m.def("e_threshold", py::overload_cast<double, double>(&kp::e_threshold),
        py::arg("gamma"), py::arg("v"));

  py::class_<kp::PhiKernel>(m, "PhiKernel")
      .def_readonly("phi", &kp::PhiKernel::phi)
      .def_readonly("m11_im", &kp::PhiKernel::m11_im)
      .def_readonly("c", &kp::PhiKernel::c)
      .def_property_readonly("m", [](const kp::PhiKernel& k) {
        return py::make_tuple(k.m.a11, k.m.a12, k.m.a21, k.m.a22);
      });
  m.def("phi_kernel", &kp::phi_kernel, py::arg("e"), py::arg("params"));

  py::class_<kp::ChebValue>(m, "ChebValue")
      .def_readonly("value", &kp::ChebValue::value)
      .def_readonly("log_abs", &kp::ChebValue::log_abs)
      .def_readonly("sign", &kp::ChebValue::sign);
  m.def("cheb_u", &kp::cheb_u, py::arg("n"), py::arg("x"));

  py::class_<kp::Transmission>(m, "Transmission")
      .def_readonly("s", &kp::Transmission::s)
      .def_readonly("log10_s", &kp::Transmission::log10_s)
      .def_readonly("resonance", &kp::Transmission::resonance);
  py::class_<kp::Resistivity>(m, "Resistivity")
      .def_readonly("rho", &kp::Resistivity::rho)
      .def_readonly("log10_rho", &kp::Resistivity::log10_rho);

  m.def("transmission_n", &kp::transmission_n, py::arg("e"), py::arg("params"));
  m.def("transmission_limit", &kp::transmission_limit, py::arg("e"),
        py::arg("gamma"), py::arg("v"), py::arg("l"));
  m.def("resistivity_n", &kp::resistivity_n, py::arg("e"), py::arg("params"));
  m.def("resistivity_limit", &kp::resistivity_limit, py::arg("e"),
        py::arg("gamma"), py::arg("v"), py::arg("l"));

  py::class_<kp::Band>(m, "Band")
      .def_readonly("index", &kp::Band::index)
      .def_readonly("e_lo", &kp::Band::e_lo)
      .def_readonly("e_hi", &kp::Band::e_hi)
      .def_readonly("xi", &kp::Band::xi)
      .def_readonly("e", &kp::Band::e);
  py::class_<kp::BandStructure>(m, "BandStructure")
      .def_readonly("n_cells", &kp::BandStructure::n_cells)
      .def_readonly("period", &kp::BandStructure::period)
      .def_readonly("bands", &kp::BandStructure::bands)
      .def_readonly("gaps", &kp::BandStructure::gaps);

  m.def("band_edges", &kp::band_edges, py::arg("params"), py::arg("e_max"));
  m.def("band_structure", &kp::band_structure, py::arg("params"),
        py::arg("e_max"), py::arg("xi_steps") = 129);
  m.def("band_solve",
        py::overload_cast<const kp::ModelParams&, int, double>(
            &kp::band_solve),
        py::arg("params"), py::arg("band_index"), py::arg("xi"));
  m.def("continuum_dispersion", &kp::continuum_dispersion, py::arg("xi"),
        py::arg("e_o"));

  py::class_<kp::DiracCombParams>(m, "DiracCombParams")
      .def(py::init([](double p, double delta) {
             return kp::DiracCombParams::from_strength(p, delta);
           }),
           py::arg("p_strength"), py::arg("delta"))
      .def_readonly("delta", &kp::DiracCombParams::delta)
      .def_readonly("lambda_cap", &kp::DiracCombParams::lambda_cap)
      .def_property_readonly("p_strength", &kp::DiracCombParams::p_strength);
  m.def("dirac_comb_lhs", &kp::dirac_comb_lhs, py::arg("k"), py::arg("comb"));
  m.def("dirac_comb_bands", &kp::dirac_comb_bands, py::arg("comb"),
        py::arg("e_max"), py::arg("xi_steps") = 129);

  m.def("amplitude_residual", [](double e, const kp::ModelParams& p) {
    return kp::amplitude_trace(e, p, kp::cplx(1.0, 0.0)).max_node_residual();
  });

  m.def("selfcheck", []() {
    py::list out;
    for (const auto& r : kp::run_selfcheck())
      out.append(py::make_tuple(r.name, r.passed, r.detail));
    return out;
  });
}
