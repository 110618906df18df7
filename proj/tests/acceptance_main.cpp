// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each criterion pins its tolerances and parameters here.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nlslab/bilinear.hpp"
#include "nlslab/bump.hpp"
#include "nlslab/experiments.hpp"
#include "nlslab/homog.hpp"
#include "nlslab/kernel.hpp"
#include "nlslab/opnorm.hpp"
#include "nlslab/report.hpp"
#include "nlslab/rng.hpp"

using namespace nlslab;
namespace fs = std::filesystem;

namespace {

int failures = 0;
std::string cli_path;

void report(int id, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("%s  #%-2d %-38s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& line) {
  std::printf("      %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

SpectralField sech_data(const TorusGrid& g) {
  return field_from_function(
      g, [](double x) { return Complex(1.0 / std::cosh(x), 0.0); });
}

// ---------------------------------------------------------------- #1
void criterion_conservation() {
  const TorusGrid g = make_grid(64.0, 2048);
  const SpectralField u0 = sech_data(g);
  bool ok = true;
  std::string detail;
  const auto run = [&](const ModelSpec& m, const SpectralField& data) {
    const StepScheme s =
        m.pointwise() ? StepScheme::strang(0.0) : StepScheme::lawson(0.0);
    const Trajectory tr = evolve(m, data, 1.0, s, 512);
    const double md = relative_mass_drift(tr);
    const double ed = relative_energy_drift(tr, m);
    if (!(md < 1e-8 && ed < 1e-6)) ok = false;
    detail += m.label() + ": mass " + fmt(md) + " energy " + fmt(ed) + "; ";
  };
  run(ModelSpec::quintic(1.0), u0);
  run(ModelSpec::alpha_truncated(0.5), u0);
  run(ModelSpec::d_truncated(16.0), u0);
  run(ModelSpec::torus_truncated(16.0, 2.0, 4.0),
      apply_multiplier(u0, sharp_low(16.0)));
  run(ModelSpec::inhomogeneous(CoefficientSpec::one_plus_cos(), 4, 1.0), u0);
  report(1, "conservation at default dt", ok, detail);
}

// ---------------------------------------------------------------- #2
void criterion_linear_exactness() {
  const TorusGrid g = make_grid(64.0, 2048);
  const SpectralField u0 = field_from_function(g, [](double x) {
    return Complex(std::exp(-x * x / 2.0), 0.0);
  });
  const SpectralField u1 = linear_flow(u0, 1.0);
  const SpectralField ref = field_from_function(g, [](double x) {
    const Complex d(1.0, 2.0);
    return std::exp(-x * x / (2.0 * d)) / std::sqrt(d);
  });
  const double err = l2_distance(u1, ref);
  report(2, "linear exactness (Gaussian)", err < 1e-6, "L2 error " + fmt(err));
}

// ---------------------------------------------------------------- #3
void criterion_integrator_orders() {
  const TorusGrid g = make_grid(16.0, 128);
  const SpectralField u0 = field_from_function(
      g, [](double x) { return Complex(2.0 / std::cosh(x), 0.0); });
  const ModelSpec q = ModelSpec::quintic(1.0);
  const double T = 1.0;

  double slopes[2] = {0, 0};
  int idx = 0;
  for (auto kind : {SchemeKind::StrangExact, SchemeKind::LawsonRK4}) {
    // Richardson against the same scheme's own fine-dt limit (the two
    // schemes' limits differ by the substep's grid-aliasing floor)
    const Trajectory ref =
        evolve(q, u0, T, {kind, T * std::pow(2.0, -14)}, 1 << 20);
    const SpectralField uref = ref.at(ref.size() - 1);
    std::vector<double> lx, ly;
    for (int p = 8; p <= 12; ++p) {
      const double dt = T * std::pow(2.0, -p);
      const Trajectory tr = evolve(q, u0, T, {kind, dt}, 1 << 20);
      lx.push_back(std::log(dt));
      ly.push_back(std::log(l2_distance(tr.at(tr.size() - 1), uref)));
    }
    slopes[idx++] = least_squares_slope(lx, ly);
  }
  const bool ok =
      std::abs(slopes[0] - 2.0) <= 0.2 && std::abs(slopes[1] - 4.0) <= 0.4;
  report(3, "integrator orders (Richardson)", ok,
         "strang " + fmt(slopes[0]) + ", lawson " + fmt(slopes[1]));
}

// ---------------------------------------------------------------- #4
void criterion_mD_suite() {
  bool ok = true;
  std::string detail;
  if (std::abs(eval_mD(2.0, 1024.0) - 10.0 / 11.0) > 1e-12) {
    ok = false;
    detail += "m_1024(2) != 10/11; ";
  }
  const TorusGrid g = make_grid(8.0, 1 << 15);  // lattice up to |xi| = 2048
  for (double D : {2.0, 16.0, 1024.0}) {
    const double c = std::log2(2.0) / std::log2(2.0 * D);
    double prev = 2.0;
    for (int k = 0; k <= g.points / 2; ++k) {
      const double xi = k / g.length;
      const double m = eval_mD(xi, D);
      const bool fine = m >= 0.0 && m <= 1.0 && m <= prev + 1e-15 &&
                        (xi > 0.5 || m == 1.0) && (xi <= 2.0 * D || m == 0.0) &&
                        eval_mD(-xi, D) == m &&
                        (m - eval_mD(2.0 * xi, D) <= c + 1e-12);
      if (!fine) {
        ok = false;
        detail += "violation at xi=" + fmt(xi) + " D=" + fmt(D) + "; ";
        break;
      }
      prev = m;
    }
  }
  if (detail.empty()) detail = "range/support/monotonicity/difference bound";
  report(4, "m_D suite (D in {2,16,1024})", ok, detail);
}

// ---------------------------------------------------------------- #5
void criterion_dispersive_constant() {
  const auto sup = [](double L) {
    return kernel_dispersive_constant(L, 4.0, 10.0, 0.5, 8192, 96).value;
  };
  const double c512 = sup(512.0);
  const double c1024 = sup(1024.0);
  const double rel = std::abs(c1024 - c512) / c512;
  report(5, "dispersive constant stable 512->1024", rel < 0.10,
         "c(512) = " + fmt(c512) + ", c(1024) = " + fmt(c1024) + ", change " +
             fmt(100 * rel) + "%");
  // The pinned pair sits below the empirical largeness threshold: with
  // band 2N = 8 the kernel wraps the torus (group speed 4 pi 2N ~ 100) by
  // t ~ L/200, contaminating the sup on [0.5, 10].  The same measurement
  // in the L >= L0 regime is stable:
  const double c4096 = sup(4096.0);
  const double c8192 = sup(8192.0);
  info("companion (L >= empirical L0 ~ 4096): c(4096) = " + fmt(c4096) +
       ", c(8192) = " + fmt(c8192) + ", change " +
       fmt(100 * std::abs(c8192 - c4096) / c4096) + "%");
}

// ---------------------------------------------------------------- #6
namespace oracle {
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                         double b, double tol, int depth, Complex fa,
                         Complex fm, Complex fb, Complex whole) {
  const double m = (a + b) / 2;
  const Complex flm = f((a + m) / 2), frm = f((m + b) / 2);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, tol / 2, depth - 1, fa, flm, fm, left) +
         adaptive_simpson(f, m, b, tol / 2, depth - 1, fm, frm, fb, right);
}
}  // namespace oracle

void criterion_kernel_vs_line() {
  const double N = 8.0, t = 1.0, L = 512.0;
  const auto f = [&](double xi) {
    return std::polar(bump(xi / N), -4.0 * M_PI * M_PI * t * xi * xi);
  };
  Complex line = 0.0;
  const int segments = 64;
  for (int s = 0; s < segments; ++s) {
    const double a = -2.0 * N + 4.0 * N * s / segments;
    const double b = -2.0 * N + 4.0 * N * (s + 1) / segments;
    const Complex fa = f(a), fm = f((a + b) / 2), fb = f(b);
    const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    line += oracle::adaptive_simpson(f, a, b, 1e-10, 30, fa, fm, fb, whole);
  }
  const double sum = std::abs(dispersive_kernel(L, N, t, 0.0));
  const double rel = std::abs(sum - std::abs(line)) / std::abs(line);
  report(6, "kernel vs line quadrature (5%)", rel < 0.05,
         "|K| = " + fmt(sum) + ", line = " + fmt(std::abs(line)) + ", rel " +
             fmt(rel));
}

// ---------------------------------------------------------------- #7
RVec plateau_mask(const TorusGrid& g, double P, double W) {
  return sample_mask(g, [P, W](double x) {
    const double a = std::abs(x);
    if (a <= P) return 1.0;
    if (a >= P + W) return 0.0;
    return 1.0 - smoothstep((a - P) / W);
  });
}

void criterion_operator_norm_laws() {
  bool ok = true;
  std::string detail;

  {  // mismatch 1/(C0 K): base C0 = 2, K = 1/2 on L = 32, n = 1024
    const TorusGrid g = make_grid(32.0, 1024);
    const auto mismatch = [&](double K, double C0) {
      const RVec E = sample_mask(g, [&](double x) {
        return (x >= C0 / 2 && x <= g.length / 4) ? 1.0 : 0.0;
      });
      const RVec F = sample_mask(g, [&](double x) {
        return (x <= -C0 / 2 && x >= -g.length / 4) ? 1.0 : 0.0;
      });
      const LinOp op = op_compose(
          op_mask(g, E),
          op_compose(op_multiplier(g, truncation_mD_rescaled(2.0, K)),
                     op_mask(g, F)));
      return operator_norm_L2(op, 600, 12).value;
    };
    const double base = mismatch(0.5, 2.0);
    const double rK = mismatch(1.0, 2.0) / base;
    const double rC = mismatch(0.5, 4.0) / base;
    if (!(rK >= 0.375 && rK <= 0.625 && rC >= 0.375 && rC <= 0.625))
      ok = false;
    detail += "mismatch K-ratio " + fmt(rK) + " C0-ratio " + fmt(rC) + "; ";
  }
  {  // commutator 1/K: plateau 4, ramps 4 on L = 32
    const TorusGrid g = make_grid(32.0, 1024);
    const RVec chi = plateau_mask(g, 4.0, 4.0);
    const auto comm = [&](double K) {
      return operator_norm_L2(
                 op_commutator(
                     op_mask(g, chi),
                     op_multiplier(g, truncation_mD_rescaled(2.0, K))),
                 600, 13)
          .value;
    };
    const double r = comm(2.0) / comm(1.0);
    if (!(r >= 0.375 && r <= 0.625)) ok = false;
    detail += "commutator ratio " + fmt(r) + "; ";
  }
  {  // cross-manifold 1/K at section-6 style window ratios
    const TorusGrid torus = make_grid(64.0, 512);
    const TorusGrid line = make_grid(256.0, 2048);
    const RVec chi = sample_mask(line, [&](double x) {
      const double W = 0.44 * torus.length;
      const double a = std::abs(x);
      if (a <= W) return 1.0;
      if (a >= W + 2.0) return 0.0;
      return 1.0 - smoothstep((a - W) / 2.0);
    });
    const auto cross = [&](double K) {
      const Multiplier m = truncation_mD_rescaled(2.0, K);
      const LinOp diff = op_sub(op_multiplier(line, m),
                                op_periodized_multiplier(line, torus, m));
      return operator_norm_L2(op_sandwich(chi, diff), 600, 15).value;
    };
    const double r = cross(0.5) / cross(0.25);
    if (!(r >= 0.375 && r <= 0.625)) ok = false;
    detail += "cross ratio " + fmt(r) + "; ";
  }
  {  // power iteration vs dense oracle on n = 256
    const TorusGrid g = make_grid(8.0, 256);
    const LinOp comm =
        op_commutator(op_mask(g, plateau_mask(g, 1.0, 1.0)),
                      op_multiplier(g, truncation_mD_rescaled(2.0, 2.0)));
    const double est = operator_norm_L2(comm, 400, 4).value;
    const double orc = dense_operator_norm(comm);
    const double rel = std::abs(est - orc) / orc;
    if (!(rel <= 0.02 && est <= orc + 1e-8)) ok = false;
    detail += "oracle gap " + fmt(100 * rel) + "%";
  }
  report(7, "operator-norm scaling laws", ok, detail);
}

// ---------------------------------------------------------------- #8
void criterion_bilinear() {
  BilinearSetup setup;
  setup.L = 128.0;
  setup.points = 8192;
  setup.time_samples = 32;
  const double N = 8.0, T = 0.25;
  std::vector<double> lx, ly;
  std::string vals;
  for (int p = -8; p <= -4; ++p) {
    const double M = N * std::pow(2.0, p);
    const NormReport r = bilinear_check(M, N, 16, 20240105, T, setup);
    lx.push_back(std::log(M / N));
    ly.push_back(std::log(r.value));
    vals += fmt(r.value) + " ";
  }
  const double slope = least_squares_slope(lx, ly);
  report(8, "bilinear L3 law (slope 0 +- 0.15)", std::abs(slope) <= 0.15,
         "slope " + fmt(slope) + "; ratios " + vals);
}

// ---------------------------------------------------------------- #9
void criterion_homogenization() {
  HomogenizationSpec spec;
  spec.h = CoefficientSpec::one_plus_cos();
  spec.n_list = {1, 2, 4, 8, 16};
  spec.length = 64.0;
  spec.points = 4096;  // h(16 x) has lattice mode 1024; keep it well inside
  spec.T = 1.0;
  spec.dt = 1.0 / 4096;
  spec.sample_stride = 64;
  const ExperimentReport rep = run_homogenization(spec);
  bool hyp = true;
  for (int i = 0; i < static_cast<int>(rep.rows.size()); ++i) {
    const double n = rep.rows[i].key;
    const double expect = 1.0 / (1.0 + 4.0 * M_PI * M_PI * n * n);
    if (std::abs(rep.value(i, "hypothesis") - expect) > 1e-10) hyp = false;
  }
  std::string col;
  for (const auto& row : rep.rows) col += fmt(row.values[0]) + " ";
  report(9, "homogenization trend (decreasing)", rep.passed() && hyp,
         "l6 column: " + col);
}

// ---------------------------------------------------------------- #10
void criterion_torus_approx() {
  TorusApproxSpec spec;
  spec.D = 2.0;
  spec.K_list = {0.25, 0.5, 1.0, 2.0};
  spec.eps_list = {0.4, 0.3, 0.2, 0.1};
  spec.T = 0.1;
  spec.torus_length = 256.0;
  spec.torus_points = 8192;
  spec.line_factor = 2;
  spec.dt = 0.1 / 512;
  spec.samples = 12;
  spec.init = InitSpec{InitSpec::Kind::Gaussian, 1.5, 1.2, 0.0, 0};
  const ExperimentReport rep = run_torus_approx(spec);
  std::string col;
  for (const auto& row : rep.rows) col += fmt(row.values[0]) + " ";
  bool conc = true;
  for (int i = 0; i < static_cast<int>(rep.rows.size()); ++i)
    conc = conc && rep.value(i, "mass_conc") <= spec.eps_list[i];
  report(10, "torus approximation trend", rep.passed() && conc,
         "discrepancy: " + col);
}

// ---------------------------------------------------------------- #11
void criterion_weak_limit() {
  WeakConvergenceSpec spec;
  spec.core = InitSpec{InitSpec::Kind::Sech, 1.0, 1.0, 0.0, 0};
  spec.bump = InitSpec{InitSpec::Kind::Gaussian, 0.8, 1.0, 0.0, 0};
  spec.x_shift_list = {8, 16, 32, 64};
  spec.M_list = {4, 8, 16, 32};
  spec.t_list = {0.25, 0.5, 1.0};
  spec.functional_count = 3;
  spec.length = 256.0;
  spec.points = 4096;
  spec.dt = 1.0 / 2048;
  const ExperimentReport rep = run_weak_convergence(spec);
  std::string col;
  for (const auto& row : rep.rows)
    col += fmt(row.values[rep.columns.size() - 2]) + " ";
  report(11, "weak-limit trend", rep.passed(), "max gap: " + col);
}

// ---------------------------------------------------------------- #12
void criterion_nonsqueezing() {
  bool ok = true;
  std::string detail;
  {  // free model, z* = 0, alpha = 0: max defect = r at d*
    NonsqueezingSpec spec;
    spec.model = ModelSpec::free();
    spec.z_star.kind = InitSpec::Kind::Zero;
    spec.ell = InitSpec{InitSpec::Kind::Gaussian, 1.0, 1.0, 0.0, 0};
    spec.r = 0.25;
    spec.T = 1.0;
    spec.length = 32.0;
    spec.points = 1024;
    spec.sample_count = 16;
    spec.dt = 1.0 / 512;
    const ExperimentReport rep = run_nonsqueezing_probe(spec);
    double maxd = 0.0;
    for (const auto& row : rep.rows) maxd = std::max(maxd, row.values[0]);
    if (std::abs(rep.rows[0].values[0] - spec.r) > 1e-10 ||
        maxd > spec.r * (1 + 1e-10))
      ok = false;
    detail += "free max defect " + fmt(maxd) + " (r = 0.25); ";
  }
  {  // T = 0: defect formula |<ell,z*>-alpha| + r exact
    NonsqueezingSpec spec;
    spec.model = ModelSpec::quintic(1.0);
    spec.z_star = InitSpec{InitSpec::Kind::Gaussian, 0.7, 2.0, 1.0, 0};
    spec.ell = InitSpec{InitSpec::Kind::Gaussian, 1.0, 1.5, 0.0, 0};
    spec.alpha = Complex(0.05, -0.02);
    spec.r = 0.1;
    spec.T = 0.0;
    spec.length = 32.0;
    spec.points = 1024;
    spec.sample_count = 8;
    const ExperimentReport rep = run_nonsqueezing_probe(spec);
    const TorusGrid g = make_grid(spec.length, spec.points);
    SpectralField ell = make_init(g, spec.ell);
    ell.coef /= std::sqrt(mass(ell));
    const double expected =
        std::abs(inner(ell, make_init(g, spec.z_star)) - spec.alpha) + spec.r;
    if (std::abs(rep.rows[0].values[0] - expected) > 1e-10) ok = false;
    detail += "T=0 defect matches |<l,z>-a|+r to " +
              fmt(std::abs(rep.rows[0].values[0] - expected)) + "; ";
  }
  {  // quintic perturbative run: witness flag via d*
    NonsqueezingSpec spec;
    spec.model = ModelSpec::quintic(1.0);
    spec.z_star = InitSpec{InitSpec::Kind::Sech, 0.8, 1.0, 0.0, 0};
    spec.ell = InitSpec{InitSpec::Kind::Gaussian, 1.0, 1.5, 0.0, 0};
    spec.r = 0.05;
    spec.T = 0.5;
    spec.length = 32.0;
    spec.points = 1024;
    spec.sample_count = 64;
    spec.dt = 0.5 / 1024;
    const ExperimentReport rep = run_nonsqueezing_probe(spec);
    double base = 0.0;
    for (const auto& [k, v] : rep.provenance)
      if (k == "baseline_defect") base = v;
    const double dstar = rep.rows[0].values[0];
    if (!rep.passed()) ok = false;  // witness_found
    if (std::abs(dstar - (base + spec.r)) > 0.10 * (base + spec.r)) ok = false;
    detail += "quintic witness defect " + fmt(dstar) +
              " > r, free-flow prediction " + fmt(base + spec.r);
  }
  report(12, "non-squeezing probe", ok, detail);
}

// ---------------------------------------------------------------- #13
void criterion_stability() {
  StabilitySpec spec;
  spec.eps_list = {1e-3, 2e-3, 4e-3, 8e-3, 1.6e-2};
  spec.length = 32.0;
  spec.points = 1024;
  spec.T = 1.0;
  spec.dt = 1.0 / 2048;
  const ExperimentReport rep = run_stability_check(spec);
  double slope = 0.0;
  for (const auto& [k, v] : rep.provenance)
    if (k == "slope") slope = v;
  report(13, "stability response (slope 1 +- 0.2)", rep.passed(),
         "log-log slope " + fmt(slope));
}

// ---------------------------------------------------------------- #14
void criterion_reproducibility() {
  bool ok = true;
  std::string detail;
  const fs::path out = fs::temp_directory_path() / "nlslab_acceptance";
  fs::create_directories(out);

  const int check_rc =
      std::system((cli_path + " check --quiet --out " + (out / "chk").string())
                      .c_str());
  if (check_rc != 0) ok = false;
  detail += std::string("check exit ") + (check_rc == 0 ? "0" : "nonzero") +
            "; ";

  const std::string cfg = R"({
    "model": {"variant": "inhomogeneous", "h": {"kind": "one_plus_cos"},
              "n": 1, "lambda": 1.0},
    "grid": {"length": 16, "points": 256},
    "time": {"T": 0.25, "dt": 0.00048828125},
    "init": {"kind": "sech"},
    "seed": 7,
    "experiment": {"kind": "homogenization", "n_list": [1, 2, 4],
                   "sample_stride": 64}
  })";
  const std::string cfg_path = (out / "homog.json").string();
  {
    std::ofstream f(cfg_path, std::ios::binary);
    f << cfg;
  }
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string run1 = (out / "r1").string(), run2 = (out / "r2").string();
  const int rc1 = std::system(
      (cli_path + " homogenize --quiet --config " + cfg_path + " --out " + run1)
          .c_str());
  const int rc2 = std::system(
      (cli_path + " homogenize --quiet --config " + cfg_path + " --out " + run2)
          .c_str());
  if (rc1 != 0 || rc2 != 0) ok = false;
  const bool same_csv = slurp(fs::path(run1) / "report.csv") ==
                        slurp(fs::path(run2) / "report.csv");
  const bool same_json = slurp(fs::path(run1) / "report.json") ==
                         slurp(fs::path(run2) / "report.json");
  if (!(same_csv && same_json)) ok = false;
  detail += std::string("re-run CSV/JSON byte-identical: ") +
            (same_csv && same_json ? "yes" : "NO");
  report(14, "reproducibility", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  cli_path = argc > 1 ? argv[1] : "./nlslab";
  std::printf("acceptance suite (tool: %s)\n", cli_path.c_str());

  criterion_conservation();
  criterion_linear_exactness();
  criterion_integrator_orders();
  criterion_mD_suite();
  criterion_dispersive_constant();
  criterion_kernel_vs_line();
  criterion_operator_norm_laws();
  criterion_bilinear();
  criterion_homogenization();
  criterion_torus_approx();
  criterion_weak_limit();
  criterion_nonsqueezing();
  criterion_stability();
  criterion_reproducibility();

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
