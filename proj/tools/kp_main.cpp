#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kp/selfcheck.hpp"
#include "kp/sweep.hpp"
#include "kp/units.hpp"

// Command-line front end.  Flags take laboratory units (eV, nm) and are
// converted once at this boundary; --model-units bypasses the conversion so
// test vectors can be fed directly.  Exit codes: 0 success, 1 domain/solver
// failure, 2 usage error.

namespace {

struct CommonFlags {
  double v_ev = 0.5;
  double gamma = 0.1;
  double l_nm = 500.0;
  std::string n_list = "100";
  double emin_ev = 0.001;
  double emax_ev = 1.0;
  int steps = 1000;
  bool model_units = false;
  std::string output;
};

std::vector<unsigned> parse_n_list(const std::string& s) {
  std::vector<unsigned> ns;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const long v = std::stol(item);
    if (v < 1) throw std::domain_error("--n entries must be >= 1");
    ns.push_back((unsigned)v);
  }
  if (ns.empty()) throw std::domain_error("--n list is empty");
  return ns;
}

double to_model_energy(double e, bool model_units) {
  return model_units ? e : kp::units::ev_to_model(e);
}

double to_model_length(double x, bool model_units) {
  return model_units ? x : kp::units::nm_to_model(x);
}

int emit(const kp::SweepTable& table, const std::string& output) {
  if (output.empty()) {
    table.write_csv(std::cout);
    return 0;
  }
  std::ofstream os(output);
  if (!os) {
    std::cerr << "error: cannot open output file " << output << "\n";
    return 1;
  }
  table.write_csv(os);
  return 0;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--v-ev", f.v_ev, "Barrier height V (eV)");
  cmd->add_option("--gamma", f.gamma, "Barrier/well width ratio");
  cmd->add_option("--l-nm", f.l_nm, "Total device length L (nm)");
  cmd->add_flag("--model-units", f.model_units,
                "Interpret all numeric flags as model units");
  cmd->add_option("--output", f.output, "Output CSV path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Kronig-Penney chain: transmission, resistivity and "
               "band structure"};
  app.require_subcommand(1);

  CommonFlags f;
  int max_bands = 0;
  int xi_steps = 129;
  double p_strength = 1.5;
  double comb_delta = 1.0;
  std::string sweep_var = "e";
  double lmin_nm = 100.0, lmax_nm = 1000.0;
  double e_fixed_ev = 0.02;
  bool inject_fault = false;

  CLI::App* transmit = app.add_subcommand(
      "transmit", "Transmission coefficient S_N and its continuum limit");
  add_common(transmit, f);
  transmit->add_option("--n", f.n_list, "Comma-separated list of cell counts");
  transmit->add_option("--emin-ev", f.emin_ev, "Lowest energy (eV)");
  transmit->add_option("--emax-ev", f.emax_ev, "Highest energy (eV)");
  transmit->add_option("--steps", f.steps, "Number of grid points");

  CLI::App* bands = app.add_subcommand(
      "bands", "Band structure E(xi) from the dispersion relation");
  add_common(bands, f);
  bands->add_option("--n", f.n_list, "Cell count (single value)");
  bands->add_option("--emax-ev", f.emax_ev, "Band search ceiling (eV)");
  bands->add_option("--xi-steps", xi_steps, "Samples per band");
  bands->add_option("--max-bands", max_bands, "Emit at most this many bands");

  CLI::App* resist = app.add_subcommand(
      "resist", "Landauer resistivity sweeps over energy or length");
  add_common(resist, f);
  resist->add_option("--n", f.n_list, "Cell count (single value)");
  resist->add_option("--sweep", sweep_var, "Sweep variable: e or l");
  resist->add_option("--emin-ev", f.emin_ev, "Lowest energy (eV)");
  resist->add_option("--emax-ev", f.emax_ev, "Highest energy (eV)");
  resist->add_option("--e-ev", e_fixed_ev, "Fixed energy for L sweeps (eV)");
  resist->add_option("--lmin-nm", lmin_nm, "Lowest length for L sweeps (nm)");
  resist->add_option("--lmax-nm", lmax_nm, "Highest length for L sweeps (nm)");
  resist->add_option("--steps", f.steps, "Number of grid points");

  CLI::App* comb = app.add_subcommand(
      "comb", "Dirac-comb reference model band structure");
  comb->add_option("--p-strength", p_strength, "Comb strength P");
  comb->add_option("--delta", comb_delta, "Comb spacing delta (model units)");
  comb->add_option("--emax-ev", f.emax_ev, "Band search ceiling (eV)");
  comb->add_flag("--model-units", f.model_units,
                 "Interpret --emax-ev as model units");
  comb->add_option("--xi-steps", xi_steps, "Samples per band");
  comb->add_option("--max-bands", max_bands, "Emit at most this many bands");
  comb->add_option("--output", f.output, "Output CSV path (default stdout)");

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "Run the embedded oracle suites");
  selfcheck->add_flag("--inject-fault", inject_fault,
                      "Corrupt a reference constant (negative control)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*selfcheck) return kp::selfcheck_main(std::cout, inject_fault);

    const double v = to_model_energy(f.v_ev, f.model_units);
    const double l = to_model_length(f.l_nm, f.model_units);
    const double emin = to_model_energy(f.emin_ev, f.model_units);
    const double emax = to_model_energy(f.emax_ev, f.model_units);
    const std::vector<unsigned> ns = parse_n_list(f.n_list);

    if (*transmit)
      return emit(kp::transmit_sweep(v, f.gamma, l, ns, emin, emax, f.steps),
                  f.output);
    if (*bands)
      return emit(kp::bands_sweep(kp::ModelParams(v, f.gamma, l, ns.front()),
                                  emax, xi_steps, max_bands),
                  f.output);
    if (*resist) {
      if (sweep_var == "e")
        return emit(kp::resist_energy_sweep(v, f.gamma, l, ns.front(), emin,
                                            emax, f.steps),
                    f.output);
      if (sweep_var == "l")
        return emit(kp::resist_length_sweep(
                        v, f.gamma, to_model_energy(e_fixed_ev, f.model_units),
                        ns.front(), to_model_length(lmin_nm, f.model_units),
                        to_model_length(lmax_nm, f.model_units), f.steps),
                    f.output);
      std::cerr << "error: --sweep must be 'e' or 'l'\n";
      return 2;
    }
    if (*comb)
      return emit(kp::comb_sweep(
                      kp::DiracCombParams::from_strength(p_strength, comb_delta),
                      emax, xi_steps, max_bands),
                  f.output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
