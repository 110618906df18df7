#include "nlslab/checks.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "nlslab/bump.hpp"
#include "nlslab/cutoff.hpp"
#include "nlslab/experiments.hpp"
#include "nlslab/homog.hpp"
#include "nlslab/kernel.hpp"
#include "nlslab/opnorm.hpp"
#include "nlslab/report.hpp"
#include "nlslab/rng.hpp"
#include "nlslab/symmetry.hpp"
#include "nlslab/traj_io.hpp"
#include "nlslab/transfer.hpp"

namespace nlslab {

namespace {

struct Harness {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& fn) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = fn();  // returns "" on success, a message on failure
      r.ok = r.detail.empty();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string expect(bool cond, const std::string& msg) {
  return cond ? "" : msg;
}

std::string fmt(double v) { return format_double(v); }

SpectralField random_band_field(const TorusGrid& grid, double band,
                                std::uint64_t seed) {
  SplitMix64 rng = substream(seed, 0);
  SpectralField f = zero_field(grid);
  for (int i = 0; i < grid.points; ++i)
    if (std::abs(grid.freq(i)) <= band)
      f.coef[i] = Complex(rng.gaussian(), rng.gaussian());
  const double m = mass(f);
  if (m > 0) f.coef /= std::sqrt(m);
  return f;
}

// Adaptive Simpson quadrature for the oscillatory line-kernel oracle.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                         double b, double tol, int depth, Complex fa,
                         Complex fm, Complex fb, Complex whole) {
  const double m = (a + b) / 2;
  const double lm = (a + m) / 2, rm = (m + b) / 2;
  const Complex flm = f(lm), frm = f(rm);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, tol / 2, depth - 1, fa, flm, fm, left) +
         adaptive_simpson(f, m, b, tol / 2, depth - 1, fm, frm, fb, right);
}

Complex line_kernel_oracle(double N, double t, double x) {
  const auto f = [&](double xi) {
    return std::polar(bump(xi / N),
                      2.0 * M_PI * x * xi - 4.0 * M_PI * M_PI * t * xi * xi);
  };
  const double a = -2.0 * N, b = 2.0 * N;
  const int segments = 64;
  Complex acc = 0.0;
  for (int s = 0; s < segments; ++s) {
    const double sa = a + (b - a) * s / segments;
    const double sb = a + (b - a) * (s + 1) / segments;
    const double sm = (sa + sb) / 2;
    const Complex fa = f(sa), fm = f(sm), fb = f(sb);
    const Complex whole = (sb - sa) / 6.0 * (fa + 4.0 * fm + fb);
    acc += adaptive_simpson(f, sa, sb, 1e-10, 30, fa, fm, fb, whole);
  }
  return acc;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const std::string& scratch_dir) {
  Harness h;

  h.run("grid: frequencies and preconditions", [] {
    const TorusGrid g = make_grid(1.0, 8);
    for (int i = 0; i < 8; ++i) {
      const int k = g.mode(i);
      if (k < -4 || k > 3) return std::string("mode out of range");
      if (std::abs(g.freq(i) - k) > 0) return std::string("freq != k/L");
    }
    const TorusGrid g2 = make_grid(2.0, 8);
    if (std::abs(g2.freq(g2.index_of_mode(3)) - 1.5) > 0)
      return std::string("freq spacing wrong for L=2");
    try {
      make_grid(1.0, 7);
      return std::string("non-power-of-two accepted");
    } catch (const std::invalid_argument&) {}
    try {
      make_grid(-1.0, 8);
      return std::string("negative length accepted");
    } catch (const std::invalid_argument&) {}
    return std::string();
  });

  h.run("field: round trip and Plancherel < 1e-12", [] {
    const TorusGrid g = make_grid(3.0, 64);
    SplitMix64 rng = substream(7, 0);
    CVec s(64);
    for (int i = 0; i < 64; ++i) s[i] = Complex(rng.gaussian(), rng.gaussian());
    const SpectralField f = field_from_samples(g, s);
    const CVec back = to_samples(f);
    double dev = 0.0;
    for (int i = 0; i < 64; ++i) dev = std::max(dev, std::abs(back[i] - s[i]));
    if (dev > 1e-12 * s.cwiseAbs().maxCoeff())
      return "round trip deviation " + fmt(dev);
    const double rel =
        std::abs(mass(f) - mass_physical(f)) / std::max(mass(f), 1e-300);
    return expect(rel < 1e-12, "Plancherel relative error " + fmt(rel));
  });

  h.run("m_D: values and lattice-wide properties", [] {
    if (std::abs(eval_mD(0.4, 16.0) - 1.0) > 0)
      return std::string("m_16(0.4) != 1");
    if (eval_mD(40.0, 16.0) != 0.0) return std::string("m_16(40) != 0");
    const double v = eval_mD(2.0, 1024.0);
    if (std::abs(v - 10.0 / 11.0) > 1e-12)
      return "m_1024(2) = " + fmt(v) + " != 10/11";
    const TorusGrid g = make_grid(8.0, 4096);
    for (double D : {2.0, 16.0, 1024.0}) {
      const double c = std::log2(2.0) / std::log2(2.0 * D);
      double prev = -1.0;
      for (int k = 0; k <= g.points / 2; ++k) {
        const double xi = k / g.length;
        const double m = eval_mD(xi, D);
        if (m < 0.0 || m > 1.0) return std::string("m_D out of [0,1]");
        if (xi <= 0.5 && m != 1.0) return std::string("m_D != 1 below 1/2");
        if (xi > 2.0 * D && m != 0.0) return std::string("m_D != 0 above 2D");
        if (std::abs(eval_mD(-xi, D) - m) > 0)
          return std::string("m_D not even");
        if (prev >= 0.0 && m > prev + 1e-15)
          return std::string("m_D increased in |xi|");
        prev = m;
        if (xi >= 0.5 && xi <= D) {
          const double diff = m - eval_mD(2.0 * xi, D);
          if (diff > c + 1e-12)
            return "difference bound violated at xi=" + fmt(xi) + " D=" +
                   fmt(D) + ": " + fmt(diff);
        }
      }
    }
    return std::string();
  });

  h.run("multipliers: idempotence, shell sum, Helmholtz", [] {
    const TorusGrid g = make_grid(4.0, 256);
    const SpectralField f = random_band_field(g, 16.0, 21);
    const Multiplier p = sharp_low(3.0);
    const SpectralField once = apply_multiplier(f, p);
    const SpectralField twice = apply_multiplier(once, p);
    if (l2_distance(once, twice) > 0)
      return std::string("sharp_low not idempotent");
    // pure mode above the cut is annihilated
    SpectralField mode = zero_field(make_grid(1.0, 64));
    mode.coef[mode.grid.index_of_mode(3)] = 1.0;
    if (mass(apply_multiplier(mode, sharp_low(2.0))) != 0.0)
      return std::string("sharp_low(2) kept mode 3 on L=1");
    // dyadic shells + low block telescope to the identity on the band
    SpectralField sum = apply_multiplier(f, sharp_low(1.0));
    for (double N = 1.0; N <= 16.0; N *= 2.0)
      sum = sum + apply_multiplier(f, sharp_shell(N));
    if (l2_distance(sum, f) > 1e-12 * std::sqrt(mass(f)))
      return std::string("sharp shell sum differs from identity");
    SpectralField smooth_sum = apply_multiplier(f, smooth_low(1.0));
    for (double N = 1.0; N <= 16.0; N *= 2.0)
      smooth_sum = smooth_sum + apply_multiplier(f, smooth_shell(N));
    if (l2_distance(smooth_sum, f) > 1e-12 * std::sqrt(mass(f)))
      return std::string("smooth shell sum differs from identity");
    // Helmholtz on a single mode
    const TorusGrid g1 = make_grid(1.0, 64);
    const int n = 3;
    const SpectralField c = field_from_function(g1, [&](double x) {
      return Complex(std::cos(2 * M_PI * n * x), 0.0);
    });
    const SpectralField hc = apply_multiplier(c, helmholtz_inverse());
    const double expected = 1.0 / (1.0 + 4.0 * M_PI * M_PI * n * n);
    const double got = lp_norm(hc, std::numeric_limits<double>::infinity());
    return expect(std::abs(got - expected) < 1e-12,
                  "Helmholtz amplitude " + fmt(got));
  });

  h.run("mass/energy: plane wave closed form, inner, lp", [] {
    const double L = 4.0, A = 1.3;
    const int k = 5;
    const TorusGrid g = make_grid(L, 256);
    SpectralField f = zero_field(g);
    f.coef[g.index_of_mode(k)] = A;
    const double lambda = 2.0;
    const double m = mass(f);
    if (std::abs(m - A * A * L) > 1e-12 * A * A * L)
      return std::string("plane-wave mass wrong");
    const double e = energy(f, ModelSpec::quintic(lambda));
    const double omega = 2.0 * M_PI * k / L;
    const double expected =
        0.5 * omega * omega * A * A * L + lambda / 6.0 * std::pow(A, 6) * L;
    if (std::abs(e - expected) > 1e-10 * std::abs(expected))
      return "plane-wave energy " + fmt(e) + " != " + fmt(expected);
    if (std::abs(inner(f, f).real() - m) > 1e-12 * m ||
        std::abs(inner(f, f).imag()) > 1e-12 * m)
      return std::string("inner(f,f) != mass");
    SpectralField g2 = zero_field(g);
    g2.coef[g.index_of_mode(k + 1)] = 1.0;
    if (std::abs(inner(f, g2)) > 1e-14)
      return std::string("orthogonal modes not orthogonal");
    SpectralField c = field_from_function(g, [](double) { return Complex(0.7, 0.0); });
    const double lp = lp_norm(c, 4.0);
    return expect(std::abs(lp - 0.7 * std::pow(L, 0.25)) < 1e-12,
                  "lp_norm of constant wrong: " + fmt(lp));
  });

  h.run("Lemma 2.1 decay: factor >= 4 per distance doubling", [] {
    const TorusGrid g = make_grid(64.0, 4096);
    const double R = 1.0;
    const SpectralField f = field_from_function(g, [&](double x) {
      if (std::abs(x) > R) return Complex(0.0, 0.0);
      const double c = std::cos(M_PI * x / (2 * R));
      return Complex(c * c, 0.0);
    });
    const SpectralField p = apply_multiplier(f, smooth_low(4.0));
    const CVec s = to_samples(p);
    const auto window_max = [&](double d) {
      double m = 0.0;
      for (int j = 0; j < g.points; ++j) {
        const double a = std::abs(g.node_centered(j)) - R;
        if (a >= d && a < 2 * d) m = std::max(m, std::abs(s[j]));
      }
      return m;
    };
    for (double d : {4.0, 8.0}) {
      const double r = window_max(d) / window_max(2 * d);
      if (!(r >= 4.0))
        return "decay factor " + fmt(r) + " < 4 at distance " + fmt(d);
    }
    return std::string();
  });

  h.run("linear flow: Gaussian closed form < 1e-6", [] {
    const TorusGrid g = make_grid(64.0, 2048);
    const SpectralField u0 = field_from_function(g, [](double x) {
      return Complex(std::exp(-x * x / 2.0), 0.0);
    });
    const double t = 1.0;
    const SpectralField ut = linear_flow(u0, t);
    const SpectralField ref = field_from_function(g, [&](double x) {
      const Complex denom(1.0, 2.0 * t);
      return std::exp(-x * x / (2.0 * denom)) / std::sqrt(denom);
    });
    const double err = l2_distance(ut, ref);
    return expect(err < 1e-6, "Gaussian propagation error " + fmt(err));
  });

  h.run("propagators: conservation, gauge, reversal", [] {
    const TorusGrid g = make_grid(16.0, 256);
    const SpectralField u0 = field_from_function(g, [](double x) {
      return Complex(1.0 / std::cosh(x), 0.0);
    });
    const ModelSpec q = ModelSpec::quintic(1.0);
    const Trajectory tr =
        evolve(q, u0, 0.25, StepScheme::strang(0.25 / 1024), 64);
    if (relative_mass_drift(tr) > 1e-12)
      return "strang mass drift " + fmt(relative_mass_drift(tr));
    if (relative_energy_drift(tr, q) > 1e-6)
      return "strang energy drift " + fmt(relative_energy_drift(tr, q));
    // gauge invariance
    const Complex phase = std::polar(1.0, 0.8);
    const Trajectory tr2 = evolve(q, phase * u0, 0.25,
                                  StepScheme::strang(0.25 / 1024), 1 << 20);
    const SpectralField a = tr2.at(tr2.size() - 1);
    const SpectralField b = phase * tr.at(tr.size() - 1);
    if (l2_distance(a, b) > 1e-10) return std::string("gauge invariance fails");
    const double rev =
        reverse_check(ModelSpec::free(), u0, 0.5, StepScheme::strang(0.5 / 64));
    return expect(rev < 1e-12, "free reversal defect " + fmt(rev));
  });

  h.run("symmetries: unitarity, inverse, commutation identity", [] {
    const TorusGrid g = make_grid(8.0, 256);
    const SpectralField f = random_band_field(g, 4.0, 5);
    SymmetryFrame fr;
    fr.scale = 2.0;
    fr.boost = 3.0 / 16.0;  // lattice frequency of the scaled grid
    fr.translation = 0.25;  // node of the scaled grid
    const SpectralField gf = apply_g(fr, f);
    if (std::abs(mass(gf) - mass(f)) > 1e-10 * mass(f))
      return std::string("apply_g not unitary");
    const SpectralField back = apply_g(fr.inverse(), gf);
    if (l2_distance(back, f) > 1e-10)
      return std::string("group inverse composition != Id");
    // identity e^{it d_xx} G f = T[e^{it d_xx} f] on sampled times
    SymmetryFrame fr2;
    fr2.scale = 1.0;
    fr2.boost = 2.0 / 8.0;
    fr2.translation = 3.0 * g.spacing();
    fr2.time_shift = 0.2;
    const TrajectorySampler free_flow = [&](double t) {
      return linear_flow(f, t);
    };
    const TrajectorySampler rhs = apply_T(fr2, free_flow);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t = -0.5 + i * (1.0 / 19.0);
      const SpectralField lhs = linear_flow(apply_G(fr2, f), t);
      worst = std::max(worst, l2_distance(lhs, rhs(t)));
    }
    if (worst > 1e-8) return "commutation defect " + fmt(worst);
    // orthogonality defect examples
    SymmetryFrame id1, id2;
    if (std::abs(orthogonality_defect(id1, id2) - 2.0) > 1e-14)
      return std::string("defect(identity, identity) != 2");
    SymmetryFrame s4 = id1;
    s4.scale = 4.0;
    if (std::abs(orthogonality_defect(id1, s4) - 4.25) > 1e-14)
      return std::string("defect(1,4) != 4.25");
    SymmetryFrame tr1 = id1;
    tr1.translation = 1.5;
    if (std::abs(orthogonality_defect(id1, tr1) - (2.0 + 1.5 * 1.5)) > 1e-14)
      return std::string("defect translation gap != 2 + d^2");
    SplitMix64 rng = substream(11, 0);
    for (int i = 0; i < 50; ++i) {
      SymmetryFrame A{std::exp2(std::floor(rng.uniform() * 5) - 2),
                      rng.gaussian(), rng.gaussian(), rng.gaussian(), 0.0};
      SymmetryFrame B{std::exp2(std::floor(rng.uniform() * 5) - 2),
                      rng.gaussian(), rng.gaussian(), rng.gaussian(), 0.0};
      const double d1 = orthogonality_defect(A, B);
      const double d2 = orthogonality_defect(B, A);
      if (std::abs(d1 - d2) > 1e-12 * std::max(1.0, d1))
        return std::string("defect not symmetric");
      if (d1 < 2.0 - 1e-12) return std::string("defect < 2");
    }
    return std::string();
  });

  h.run("cutoffs: slopes, gaps, residuals", [] {
    const TorusGrid tg = make_grid(128.0, 1024);
    const TorusGrid lg = make_grid(256.0, 2048);
    const SpectralField u0 = make_init(tg, InitSpec{});
    const CutoffSet cs = build_cutoffs(2.0, 0.5, 0.1, 0.2, u0, lg);
    for (double s : cs.max_slope)
      if (s > cs.slope_bound)
        return "cutoff slope " + fmt(s) + " above bound " + fmt(cs.slope_bound);
    if (cs.min_support_gap < cs.gap_bound)
      return std::string("cutoff support gap below DKT/eta");
    for (double r : cs.residual_mass)
      if (r > cs.eta) return "cutoff residual " + fmt(r) + " above eta";
    try {
      build_cutoffs(2.0, 8.0, 4.0, 0.05, u0, lg);
      return std::string("oversized layout accepted");
    } catch (const std::runtime_error&) {}
    return std::string();
  });

  h.run("push-forward / pull-back", [] {
    const TorusGrid tg = make_grid(16.0, 128);
    const TorusGrid lg = make_grid(64.0, 512);
    const SpectralField bump_line = field_from_function(lg, [](double x) {
      return Complex(std::exp(-x * x), 0.0);
    });
    const SpectralField folded = push_forward(bump_line, tg);
    const SpectralField back = pull_back(folded, lg, 0.0, tg.length);
    if (l2_distance(push_forward(back, tg), folded) > 1e-12)
      return std::string("p_* p^* != Id on one-period support");
    // two copies at distance L fold to twice the bump
    const SpectralField two = field_from_function(lg, [&](double x) {
      return Complex(std::exp(-x * x) +
                         std::exp(-(x - tg.length) * (x - tg.length)),
                     0.0);
    });
    const SpectralField folded2 = push_forward(two, tg);
    if (l2_distance(folded2, Complex(2.0, 0.0) * folded) > 1e-10)
      return std::string("two copies did not double");
    if (mass(folded2) > 4.0 * mass(two) + 1e-12)
      return std::string("push-forward mass bound violated");
    return std::string();
  });

  h.run("dispersive kernel: symmetry, t=0 value, line oracle 5%", [] {
    const Complex a = dispersive_kernel(64.0, 2.0, 0.3, 5.0);
    const Complex b = dispersive_kernel(64.0, 2.0, 0.3, -5.0);
    if (std::abs(a - b) > 1e-12 * std::abs(a))
      return std::string("kernel not even in x");
    const Complex k0 = dispersive_kernel(256.0, 1.0, 0.0, 0.0);
    if (std::abs(k0.imag()) > 1e-12)
      return std::string("K(0,0) not real");
    if (k0.real() < 2.0 || k0.real() > 4.0)
      return "K(0,0) = " + fmt(k0.real()) + " outside [2,4]";
    const Complex sum = dispersive_kernel(512.0, 8.0, 1.0, 0.0);
    const Complex line = line_kernel_oracle(8.0, 1.0, 0.0);
    const double rel = std::abs(std::abs(sum) - std::abs(line)) /
                       std::abs(line);
    return expect(rel < 0.05,
                  "kernel vs line quadrature mismatch " + fmt(rel));
  });

  h.run("oscillatory sum: trivial and kernel-regime cases", [] {
    // single-term support: M small enough that only n=0 contributes
    const OscillatorySumCheck single =
        oscillatory_sum_check(3.0, 0.7, 32.0, 0.4);
    if (std::abs(single.value - 1.0 / 32.0) > 1e-12)
      return std::string("single-term sum != 1/L");
    // kernel regime |x| > 100(1+NT)
    const double L = 256.0, N = 1.0, T = 1.0;
    for (double x : {110.0, 120.0, 127.0}) {
      const OscillatorySumCheck c = oscillatory_sum_check(x, T, L, L * N);
      if (c.vacuous) return std::string("vacuous bound in kernel regime");
      if (c.ratio > 10.0)
        return "empirical ratio " + fmt(c.ratio) + " above 10";
    }
    return std::string();
  });

  h.run("operator norms: identity and diagonal", [] {
    const TorusGrid g = make_grid(8.0, 128);
    const NormReport id = operator_norm_L2(op_identity(g), 50, 3);
    if (std::abs(id.value - 1.0) > 1e-6)
      return "identity norm " + fmt(id.value);
    const Multiplier m = custom("diag", [](double xi) {
      return 0.7 / (1.0 + xi * xi);
    });
    const NormReport d = operator_norm_L2(op_multiplier(g, m), 200, 3);
    return expect(std::abs(d.value - 0.7) < 1e-6,
                  "diagonal sup norm " + fmt(d.value));
  });

  h.run("homogenization defect: closed forms", [] {
    const NormReport zero =
        homogenization_defect(CoefficientSpec::constant_coeff(2.0), 3, 1.0);
    if (zero.value > 1e-14) return std::string("constant h defect nonzero");
    const NormReport one =
        homogenization_defect(CoefficientSpec::one_plus_cos(), 1, 1.0);
    const double expected = 1.0 / (1.0 + 4.0 * M_PI * M_PI);
    if (std::abs(one.value - expected) > 1e-10)
      return "defect(n=1) = " + fmt(one.value) + " != " + fmt(expected);
    const NormReport n4 =
        homogenization_defect(CoefficientSpec::one_plus_cos(), 4, 1.0);
    const double e4 = 1.0 / (1.0 + 4.0 * M_PI * M_PI * 16.0);
    return expect(std::abs(n4.value - e4) < 1e-10,
                  "defect(n=4) = " + fmt(n4.value));
  });

  h.run("trajectory file: round trip and validation", [scratch_dir] {
    const TorusGrid g = make_grid(4.0, 64);
    const SpectralField u0 = random_band_field(g, 4.0, 23);
    const Trajectory tr =
        evolve(ModelSpec::quintic(1.0), u0, 0.1, StepScheme::strang(0.01), 2);
    const std::string path = scratch_dir + "/check_traj.nlst";
    save_trajectory(tr, path);
    const Trajectory back = load_trajectory(path);
    if (back.size() != tr.size()) return std::string("sample count changed");
    for (int i = 0; i < tr.size(); ++i)
      if (back.times[i] != tr.times[i] ||
          (back.snapshots[i] - tr.snapshots[i]).cwiseAbs().maxCoeff() != 0.0)
        return std::string("round trip not bit-identical");
    std::ofstream bad(path + ".bad", std::ios::binary);
    bad << "XXXX";
    bad.close();
    try {
      load_trajectory(path + ".bad");
      return std::string("bad magic accepted");
    } catch (const std::runtime_error&) {}
    return std::string();
  });

  h.run("report emission: determinism", [scratch_dir] {
    ExperimentReport rep;
    rep.kind = "check";
    rep.columns = {"a", "b"};
    rep.rows.push_back({1.0, {0.1234567890123456789, 2e-300}});
    rep.add_verdict("ok", true);
    const std::string c1 = scratch_dir + "/r1.csv", j1 = scratch_dir + "/r1.json";
    const std::string c2 = scratch_dir + "/r2.csv", j2 = scratch_dir + "/r2.json";
    emit_report(rep, c1, j1);
    emit_report(rep, c2, j2);
    const auto slurp = [](const std::string& p) {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };
    if (slurp(c1) != slurp(c2) || slurp(j1) != slurp(j2))
      return std::string("re-emission not byte-identical");
    return std::string();
  });

  return h.results;
}

}  // namespace nlslab
