#include "kp/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "kp/chebyshev.hpp"
#include "kp/kernel.hpp"
#include "kp/mat2.hpp"
#include "kp/transport.hpp"
#include "kp/units.hpp"

namespace kp {

namespace {

double rel_err(const Mat2C& a, const Mat2C& b) {
  double worst = 0.0;
  const cplx* pa = &a.a11;
  const cplx* pb = &b.a11;
  for (int i = 0; i < 4; ++i) {
    const double scale = std::max({std::abs(pa[i]), std::abs(pb[i]), 1e-30});
    worst = std::max(worst, std::abs(pa[i] - pb[i]) / scale);
  }
  return worst;
}

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uv(0.5, 20.0), ug(0.02, 2.0),
      ul(2.0, 40.0);
  std::uniform_int_distribution<unsigned> un(1, 64);
  return ModelParams(uv(rng), ug(rng), ul(rng), un(rng));
}

// E draw kept away from the k=0 and overflow extremes of the kernel
double random_energy(std::mt19937_64& rng, double v) {
  std::uniform_real_distribution<double> ue(0.02, 2.0);
  return ue(rng) * v;
}

SuiteResult suite_cheb_power(double tol) {
  std::mt19937_64 rng(1234);
  double worst = 0.0;
  int used = 0;
  while (used < 500) {
    const ModelParams p = random_params(rng);
    const double e = random_energy(rng, p.v);
    const PhiKernel kern = phi_kernel(e, p);
    if (std::fabs(kern.phi) > 40.0) continue;  // keep both routes representable
    ++used;
    worst = std::max(worst,
                     rel_err(m_power_cheb(kern, p.n),
                             mat_power_direct(kern.m, p.n)));
  }
  std::ostringstream os;
  os << "max rel err " << worst << " over 500 draws";
  return {"cheb-vs-direct-power", worst <= tol, os.str()};
}

SuiteResult suite_two_path_transmission() {
  std::mt19937_64 rng(4321);
  double worst = 0.0;
  int used = 0;
  while (used < 500) {
    const ModelParams p = random_params(rng);
    const double e = random_energy(rng, p.v);
    const PhiKernel kern = phi_kernel(e, p);
    if (std::fabs(kern.phi) > 40.0) continue;
    ++used;
    const Mat2C mn = mat_power_direct(kern.m, p.n);
    const double s_direct = 1.0 / std::norm(mn.a11);
    const double s_cheb = transmission_n(e, p).s;
    worst = std::max(worst, std::fabs(s_direct - s_cheb) /
                                std::max({s_direct, s_cheb, 1e-30}));
  }
  std::ostringstream os;
  os << "max rel err " << worst << " over 500 draws";
  return {"two-path-transmission", worst <= 1e-9, os.str()};
}

SuiteResult suite_sl2() {
  const ModelParams p(units::ev_to_model(0.5), 0.1, 500.0, 100);
  double worst_det = 0.0, worst_flux = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double e = 2.0 * p.v * (double)i / 1000.0;
    const PhiKernel kern = phi_kernel(e, p);
    worst_det = std::max(worst_det, std::abs(det(kern.m) - cplx(1.0)));
    worst_flux = std::max(
        worst_flux,
        std::fabs(std::norm(kern.m.a11) - std::norm(kern.m.a12) - 1.0));
  }
  std::ostringstream os;
  os << "max |det-1| " << worst_det << ", max flux defect " << worst_flux;
  return {"sl2-invariants", worst_det <= 1e-12 && worst_flux <= 1e-10,
          os.str()};
}

SuiteResult suite_branch_continuity() {
  const ModelParams p(units::ev_to_model(0.5), 0.1, 500.0, 50);
  const double eps = 1e-6;
  const double below = phi_kernel(p.v - eps, p).phi;
  const double above = phi_kernel(p.v + eps, p).phi;
  const double jump = std::fabs(below - above);
  std::ostringstream os;
  os << "|Phi(V-eps)-Phi(V+eps)| = " << jump;
  return {"branch-continuity", jump <= 10.0 * eps, os.str()};
}

SuiteResult suite_cheb_recurrence() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = ux(rng);
    const long n = (long)(rng() % 65);
    const double ref = cheb_u_recurrence(n, x);
    const double got = cheb_u(n, x).value;
    worst = std::max(worst, std::fabs(got - ref) /
                                std::max(1.0, std::fabs(ref)));
  }
  std::ostringstream os;
  os << "max rel err " << worst;
  return {"cheb-recurrence", worst <= 1e-11, os.str()};
}

SuiteResult suite_amplitude_continuity() {
  std::mt19937_64 rng(777);
  double worst = 0.0;
  int used = 0;
  while (used < 100) {
    std::uniform_real_distribution<double> uv(0.5, 10.0), ug(0.05, 1.5),
        ul(2.0, 25.0);
    std::uniform_int_distribution<unsigned> un(1, 32);
    const ModelParams p(uv(rng), ug(rng), ul(rng), un(rng));
    const double e = random_energy(rng, p.v);
    if (std::fabs(e - p.v) < 1e-6 * std::max(1.0, p.v)) continue;
    ++used;
    worst = std::max(worst,
                     amplitude_trace(e, p, cplx(1.0, 0.5)).max_node_residual());
  }
  std::ostringstream os;
  os << "max node residual " << worst << " over 100 draws";
  return {"amplitude-continuity", worst <= 1e-9, os.str()};
}

SuiteResult suite_convergence_trend() {
  const double v = units::ev_to_model(0.5);
  const double gamma = 0.1, l = 500.0;
  const double e_o = e_threshold(gamma, v);
  bool ok = true;
  std::ostringstream os;
  for (double factor : {1.5, 3.0, 10.0}) {
    const double e = factor * e_o;
    const double sbar = transmission_limit(e, gamma, v, l).s;
    const double err_a =
        std::fabs(transmission_n(e, ModelParams(v, gamma, l, 4000)).s - sbar);
    const double err_b =
        std::fabs(transmission_n(e, ModelParams(v, gamma, l, 16000)).s - sbar);
    ok = ok && err_b <= 0.6 * err_a + 1e-12;
    os << "E=" << factor << "Eo: " << err_a << "->" << err_b << "  ";
  }
  return {"convergence-trend", ok, os.str()};
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(bool inject_fault) {
  std::vector<SuiteResult> out;
  out.push_back(suite_cheb_power(inject_fault ? 1e-18 : 1e-9));
  out.push_back(suite_two_path_transmission());
  out.push_back(suite_sl2());
  out.push_back(suite_branch_continuity());
  out.push_back(suite_cheb_recurrence());
  out.push_back(suite_amplitude_continuity());
  out.push_back(suite_convergence_trend());
  return out;
}

int selfcheck_main(std::ostream& os, bool inject_fault) {
  int rc = 0;
  for (const SuiteResult& r : run_selfcheck(inject_fault)) {
    os << (r.passed ? "ok   " : "FAIL ") << r.name << "  " << r.detail
       << "\n";
    if (!r.passed && rc == 0) rc = 1;
  }
  return rc;
}

}  // namespace kp
