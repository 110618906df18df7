#include "nlslab/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "nlslab/homog.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/parallel.hpp"
#include "nlslab/rng.hpp"
#include "nlslab/transfer.hpp"

namespace nlslab {

SpectralField make_init(const TorusGrid& grid, const InitSpec& init) {
  switch (init.kind) {
    case InitSpec::Kind::Zero:
      return zero_field(grid);
    case InitSpec::Kind::Gaussian:
      return field_from_function(grid, [&](double x) {
        const double d = (x - init.center) / init.width;
        return Complex(init.amplitude * std::exp(-d * d / 2.0), 0.0);
      });
    case InitSpec::Kind::Sech:
      return field_from_function(grid, [&](double x) {
        const double d = (x - init.center) / init.width;
        return Complex(init.amplitude / std::cosh(d), 0.0);
      });
    case InitSpec::Kind::PlaneWave: {
      SpectralField f = zero_field(grid);
      f.coef[grid.index_of_mode(init.mode)] = init.amplitude;
      return f;
    }
  }
  return zero_field(grid);
}

double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares_slope: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

constexpr double kTrendFloor = 1e-8;

bool no_increase(const std::vector<double>& v, double tol) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] > (1.0 + tol) * v[i] + kTrendFloor) return false;
  return true;
}

bool final_fraction(const std::vector<double>& v, double frac) {
  return v.back() < frac * v.front() + kTrendFloor;
}

bool within_rel(double refined, double base, double tol) {
  return std::abs(refined - base) <= tol * std::max(std::abs(base), kTrendFloor);
}

StepScheme scheme_for(const ModelSpec& model, double dt) {
  return model.pointwise() ? StepScheme::strang(dt) : StepScheme::lawson(dt);
}

}  // namespace

// ---------------------------------------------------------------------------

ExperimentReport run_homogenization(const HomogenizationSpec& spec) {
  // hypothesis check first: the resolvent defect must decrease along n
  std::vector<double> defect(spec.n_list.size());
  for (size_t i = 0; i < spec.n_list.size(); ++i)
    defect[i] = homogenization_defect(spec.h, spec.n_list[i], 1.0).value;
  for (size_t i = 0; i + 1 < defect.size(); ++i)
    if (defect[i + 1] > defect[i] + 1e-12)
      throw std::runtime_error(
          "run_homogenization: hypothesis check failed, "
          "(-d_xx+1)^{-1}(h(n.)-hbar) does not decrease from n = " +
          std::to_string(spec.n_list[i]));

  const double hbar = spec.h.mean();
  const double dt = spec.dt > 0 ? spec.dt : spec.T * std::pow(2.0, -14);

  struct RowOut {
    double l6 = 0, linf_l2 = 0;
  };
  const auto compute = [&](int n, double dt_row, int points) {
    const TorusGrid grid = make_grid(spec.length, points);
    const SpectralField u0 = make_init(grid, spec.init);
    const ModelSpec osc =
        ModelSpec::inhomogeneous(spec.h, n, spec.lambda);
    const ModelSpec avg = ModelSpec::quintic(spec.lambda * hbar);
    const Trajectory a = evolve(osc, u0, spec.T, StepScheme::strang(dt_row),
                                spec.sample_stride);
    const Trajectory b = evolve(avg, u0, spec.T, StepScheme::strang(dt_row),
                                spec.sample_stride);
    const Trajectory d = difference(a, b);
    RowOut out;
    out.l6 = spacetime_norm(d, 6.0, 6.0).value;
    out.linf_l2 =
        spacetime_norm(d, std::numeric_limits<double>::infinity(), 2.0).value;
    return out;
  };

  std::vector<RowOut> rows(spec.n_list.size());
  parallel_for(static_cast<int>(spec.n_list.size()), [&](int i) {
    rows[i] = compute(spec.n_list[i], dt, spec.points);
  });

  // discretization firewall on the first and last rows
  RowOut fw_first{}, fw_last{};
  {
    std::vector<int> idx = {0, static_cast<int>(spec.n_list.size()) - 1};
    std::vector<RowOut> fw(2);
    parallel_for(2, [&](int i) {
      fw[i] = compute(spec.n_list[idx[i]], dt / 2.0, spec.points * 2);
    });
    fw_first = fw[0];
    fw_last = fw[1];
  }

  ExperimentReport rep;
  rep.kind = "homogenization";
  rep.sweep_key = "n";
  rep.seed = spec.seed;
  rep.columns = {"l6_diff", "linf_l2_diff", "hypothesis"};
  std::vector<double> l6;
  for (size_t i = 0; i < spec.n_list.size(); ++i) {
    rep.rows.push_back({static_cast<double>(spec.n_list[i]),
                        {rows[i].l6, rows[i].linf_l2, defect[i]}});
    l6.push_back(rows[i].l6);
  }
  rep.provenance = {{"T", spec.T},
                    {"dt", dt},
                    {"length", spec.length},
                    {"points", static_cast<double>(spec.points)},
                    {"hbar", hbar},
                    {"firewall_first_l6", fw_first.l6},
                    {"firewall_last_l6", fw_last.l6}};
  rep.add_verdict("hypothesis_decreasing", true);
  rep.add_verdict("no_increase_10pct", no_increase(l6, 0.10));
  rep.add_verdict("final_below_quarter", final_fraction(l6, 0.25));
  rep.add_verdict("discretization_firewall",
                  within_rel(fw_first.l6, l6.front(), 0.10) &&
                      within_rel(fw_last.l6, l6.back(), 0.10));
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport run_torus_approx(const TorusApproxSpec& spec) {
  if (spec.K_list.size() != spec.eps_list.size() || spec.K_list.empty())
    throw std::invalid_argument("run_torus_approx: K and eps lists mismatch");

  const double Kmin = *std::min_element(spec.K_list.begin(), spec.K_list.end());
  const double band = 2.0 * spec.D * Kmin;  // admissible subspace for all rows

  struct RowOut {
    double discrepancy = 0, mass_conc = 0;
    double max_slope = 0, slope_bound = 0, min_gap = 0, gap_bound = 0;
    double residual0 = 0;
  };

  const auto compute = [&](int i, double dt_scale, int node_scale) {
    const double K = spec.K_list[i];
    const double eps = spec.eps_list[i];
    const double Ncut = 2.0 * spec.D * K;
    const TorusGrid tg =
        make_grid(spec.torus_length, spec.torus_points * node_scale);
    const TorusGrid lg = make_grid(spec.torus_length * spec.line_factor,
                                   spec.torus_points * spec.line_factor *
                                       node_scale);
    SpectralField u0 = apply_multiplier(make_init(tg, spec.init),
                                        sharp_low(band));

    const CutoffSet cs = build_cutoffs(spec.D, K, spec.T, eps, u0, lg);

    const SpectralField line0 =
        apply_mask(place_window(u0, lg, cs.center_torus), cs.masks[0]);

    double dt = spec.dt > 0 ? spec.dt : spec.T / 1024.0;
    dt *= dt_scale;
    const long steps = std::lround(std::ceil(spec.T / dt - 1e-12));
    const int stride =
        std::max(1L, steps / std::max(1, spec.samples));

    const Trajectory line_traj =
        evolve(ModelSpec::rescaled_truncated(spec.D, K), line0, spec.T,
               StepScheme::lawson(dt), stride);
    const Trajectory torus_traj =
        evolve(ModelSpec::torus_truncated(Ncut, spec.D, K), u0, spec.T,
               StepScheme::lawson(dt), stride);
    if (line_traj.size() != torus_traj.size())
      throw std::runtime_error("run_torus_approx: sample count mismatch");

    const Multiplier low = smooth_low(Ncut);
    Trajectory diff = torus_traj;
    diff.model_label = "comparison";
    double mass_conc = 0.0;
    const RVec one_minus_chi1 =
        RVec::Ones(lg.points) - cs.masks[1];
    for (int s = 0; s < line_traj.size(); ++s) {
      const SpectralField lu = line_traj.at(s);
      const SpectralField folded = apply_multiplier(
          fold_window(apply_mask(lu, cs.masks[2]), tg, cs.center_torus), low);
      diff.snapshots[s] = folded.coef - torus_traj.snapshots[s];
      mass_conc = std::max(
          mass_conc, std::sqrt(mass(apply_mask(lu, one_minus_chi1))));
    }
    RowOut out;
    out.discrepancy = strichartz_S(diff).value;
    out.mass_conc = mass_conc;
    out.max_slope = *std::max_element(cs.max_slope.begin(), cs.max_slope.end());
    out.slope_bound = cs.slope_bound;
    out.min_gap = cs.min_support_gap;
    out.gap_bound = cs.gap_bound;
    out.residual0 = cs.residual_mass[0];
    return out;
  };

  const int nrows = static_cast<int>(spec.K_list.size());
  std::vector<RowOut> rows(nrows);
  parallel_for(nrows, [&](int i) { rows[i] = compute(i, 1.0, 1); });

  std::vector<RowOut> fw(2);
  {
    std::vector<int> idx = {0, nrows - 1};
    parallel_for(2, [&](int i) { fw[i] = compute(idx[i], 0.5, 2); });
  }

  ExperimentReport rep;
  rep.kind = "torus_approx";
  rep.sweep_key = "K";
  rep.seed = spec.seed;
  rep.columns = {"discrepancy", "mass_conc", "eps",
                 "max_slope",   "min_gap",   "residual0"};
  std::vector<double> disc;
  bool conc_ok = true, cutoff_ok = true;
  for (int i = 0; i < nrows; ++i) {
    rep.rows.push_back({spec.K_list[i],
                        {rows[i].discrepancy, rows[i].mass_conc,
                         spec.eps_list[i], rows[i].max_slope, rows[i].min_gap,
                         rows[i].residual0}});
    disc.push_back(rows[i].discrepancy);
    conc_ok = conc_ok && rows[i].mass_conc <= spec.eps_list[i];
    cutoff_ok = cutoff_ok && rows[i].max_slope <= rows[i].slope_bound &&
                rows[i].min_gap >= rows[i].gap_bound;
  }
  rep.provenance = {{"T", spec.T},
                    {"D", spec.D},
                    {"torus_length", spec.torus_length},
                    {"torus_points", static_cast<double>(spec.torus_points)},
                    {"line_factor", static_cast<double>(spec.line_factor)},
                    {"init_band", band},
                    {"firewall_first", fw[0].discrepancy},
                    {"firewall_last", fw[1].discrepancy}};
  rep.add_verdict("no_increase_10pct", no_increase(disc, 0.10));
  rep.add_verdict("final_below_half", final_fraction(disc, 0.5));
  rep.add_verdict("mass_concentration_below_eps", conc_ok);
  rep.add_verdict("cutoff_invariants", cutoff_ok);
  rep.add_verdict("discretization_firewall",
                  within_rel(fw[0].discrepancy, disc.front(), 0.10) &&
                      within_rel(fw[1].discrepancy, disc.back(), 0.10));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<SpectralField> weak_functionals(const TorusGrid& grid, int count) {
  std::vector<SpectralField> gs;
  for (int m = 0; m < count; ++m) {
    const double xi_m = 0.5 * m;
    SpectralField g = field_from_function(grid, [&](double x) {
      return std::polar(std::exp(-x * x / (2.0 * 2.0 * 2.0)),
                        2.0 * M_PI * xi_m * x);
    });
    g = apply_multiplier(g, sharp_low(4.0));
    g.coef /= std::sqrt(mass(g));
    gs.push_back(g);
  }
  return gs;
}

}  // namespace

ExperimentReport run_weak_convergence(const WeakConvergenceSpec& spec) {
  if (spec.x_shift_list.size() != spec.M_list.size() ||
      spec.x_shift_list.empty())
    throw std::invalid_argument("run_weak_convergence: list sizes mismatch");
  const double T = *std::max_element(spec.t_list.begin(), spec.t_list.end());
  const double dt = spec.dt > 0 ? spec.dt : T / 4096.0;
  const long steps = std::lround(std::ceil(T / dt - 1e-12));
  const int stride = std::max(1L, steps / 64);

  const auto compute = [&](int row, double dt_scale, int node_scale)
      -> std::vector<double> {
    const TorusGrid grid = make_grid(spec.length, spec.points * node_scale);
    // safe window: bump must stay away from the wrap point
    if (std::abs(spec.bump.center + spec.x_shift_list[row]) >
        0.4 * spec.length)
      throw std::invalid_argument(
          "run_weak_convergence: bump shift exceeds the grid's safe window");
    const std::vector<SpectralField> gs =
        weak_functionals(grid, spec.functional_count);

    const SpectralField core = make_init(grid, spec.core);
    InitSpec shifted = spec.bump;
    shifted.center += spec.x_shift_list[row];
    const SpectralField u0n = core + make_init(grid, shifted);

    // same integrator for both flows so the gap floor is the genuine
    // truncation difference, not the splitting-error mismatch
    const Trajectory ref = evolve(ModelSpec::quintic(1.0), core, T,
                                  StepScheme::lawson(dt * dt_scale), stride);
    const Trajectory trunc =
        evolve(ModelSpec::rescaled_truncated(spec.D, spec.M_list[row]), u0n, T,
               StepScheme::lawson(dt * dt_scale), stride);

    std::vector<double> gaps;
    for (size_t gi = 0; gi < gs.size(); ++gi) {
      for (double t : spec.t_list) {
        int idx = -1;
        for (int s = 0; s < ref.size(); ++s)
          if (std::abs(ref.times[s] - t) < 1e-9) idx = s;
        if (idx < 0)
          throw std::runtime_error(
              "run_weak_convergence: t not on the sample lattice");
        const Complex a = inner(gs[gi], trunc.at(idx));
        const Complex b = inner(gs[gi], ref.at(idx));
        gaps.push_back(std::abs(a - b));
      }
    }
    return gaps;
  };

  const int nrows = static_cast<int>(spec.x_shift_list.size());
  std::vector<std::vector<double>> rows(nrows);
  parallel_for(nrows, [&](int i) { rows[i] = compute(i, 1.0, 1); });

  std::vector<std::vector<double>> fw(2);
  {
    std::vector<int> idx = {0, nrows - 1};
    parallel_for(2, [&](int i) { fw[i] = compute(idx[i], 0.5, 2); });
  }

  ExperimentReport rep;
  rep.kind = "weak_convergence";
  rep.sweep_key = "x_shift";
  rep.seed = spec.seed;
  for (int m = 0; m < spec.functional_count; ++m)
    for (size_t j = 0; j < spec.t_list.size(); ++j)
      rep.columns.push_back("gap_g" + std::to_string(m) + "_t" +
                            std::to_string(j));
  rep.columns.push_back("max_gap");
  rep.columns.push_back("M");

  std::vector<double> max_gaps;
  for (int i = 0; i < nrows; ++i) {
    std::vector<double> vals = rows[i];
    const double mg = *std::max_element(vals.begin(), vals.end());
    vals.push_back(mg);
    vals.push_back(spec.M_list[i]);
    rep.rows.push_back({spec.x_shift_list[i], std::move(vals)});
    max_gaps.push_back(mg);
  }

  bool per_column_ok = true;
  const int ncols = spec.functional_count * static_cast<int>(spec.t_list.size());
  for (int c = 0; c < ncols; ++c) {
    std::vector<double> col;
    for (int i = 0; i < nrows; ++i) col.push_back(rows[i][c]);
    per_column_ok = per_column_ok && no_increase(col, 0.10);
  }
  const double fw_first = *std::max_element(fw[0].begin(), fw[0].end());
  const double fw_last = *std::max_element(fw[1].begin(), fw[1].end());

  rep.provenance = {{"T", T},
                    {"dt", dt},
                    {"D", spec.D},
                    {"length", spec.length},
                    {"points", static_cast<double>(spec.points)},
                    {"functionals", static_cast<double>(spec.functional_count)},
                    {"firewall_first", fw_first},
                    {"firewall_last", fw_last}};
  rep.add_verdict("per_pairing_no_increase", per_column_ok);
  rep.add_verdict("final_below_quarter", final_fraction(max_gaps, 0.25));
  rep.add_verdict("discretization_firewall",
                  within_rel(fw_first, max_gaps.front(), 0.10) &&
                      within_rel(fw_last, max_gaps.back(), 0.10));
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport run_nonsqueezing_probe(const NonsqueezingSpec& spec) {
  if (!(spec.r > 0.0))
    throw std::invalid_argument("run_nonsqueezing_probe: r must be positive");
  const TorusGrid grid = make_grid(spec.length, spec.points);
  SpectralField ell = make_init(grid, spec.ell);
  const double ml = mass(ell);
  if (ml <= 0.0)
    throw std::invalid_argument("run_nonsqueezing_probe: ell must be nonzero");
  ell.coef /= std::sqrt(ml);  // normalized internally

  const SpectralField z = make_init(grid, spec.z_star);
  const double dt = spec.dt > 0 ? spec.dt : spec.T / 2048.0;
  const StepScheme scheme = scheme_for(spec.model, dt);

  const auto pairing_at_T = [&](const SpectralField& u0) {
    if (spec.T == 0.0) return inner(ell, u0);
    const Trajectory tr = evolve(spec.model, u0, spec.T, scheme, 1 << 20);
    return inner(ell, tr.at(tr.size() - 1));
  };

  const Complex c0 = pairing_at_T(z) - spec.alpha;
  // align so that <ell, r d*> adds constructively to c0; the pairing
  // conjugates its second slot, hence the conjugate phase
  const Complex phase =
      std::abs(c0) > 0 ? std::conj(c0) / std::abs(c0) : Complex(1.0);
  const SpectralField dstar = phase * linear_flow(ell, -spec.T);

  std::vector<SpectralField> dirs;
  dirs.push_back(dstar);
  for (int i = 0; i < spec.sample_count; ++i) {
    SplitMix64 rng = substream(spec.seed, static_cast<std::uint64_t>(i + 1));
    SpectralField d = zero_field(grid);
    for (int k = 0; k < grid.points; ++k)
      if (std::abs(grid.freq(k)) <= spec.direction_band)
        d.coef[k] = Complex(rng.gaussian(), rng.gaussian());
    d.coef /= std::sqrt(mass(d));
    dirs.push_back(d);
  }

  std::vector<double> defects(dirs.size());
  parallel_for(static_cast<int>(dirs.size()), [&](int i) {
    defects[i] = std::abs(pairing_at_T(z + spec.r * dirs[i]) - spec.alpha);
  });

  ExperimentReport rep;
  rep.kind = "nonsqueezing";
  rep.sweep_key = "direction";
  rep.seed = spec.seed;
  rep.columns = {"defect", "is_witness", "is_deterministic_candidate"};
  double max_defect = 0.0;
  int argmax = 0;
  for (size_t i = 0; i < dirs.size(); ++i) {
    const bool witness = defects[i] > spec.r;
    rep.rows.push_back({static_cast<double>(i),
                        {defects[i], witness ? 1.0 : 0.0, i == 0 ? 1.0 : 0.0}});
    if (defects[i] > max_defect) {
      max_defect = defects[i];
      argmax = static_cast<int>(i);
    }
  }
  rep.provenance = {{"r", spec.r},
                    {"T", spec.T},
                    {"alpha_re", spec.alpha.real()},
                    {"alpha_im", spec.alpha.imag()},
                    {"max_defect", max_defect},
                    {"argmax_direction", static_cast<double>(argmax)},
                    {"baseline_defect", std::abs(c0)},
                    {"dt", dt}};
  rep.add_verdict("witness_found", max_defect > spec.r);
  return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport run_stability_check(const StabilitySpec& spec) {
  const TorusGrid grid = make_grid(spec.length, spec.points);
  const double dt = spec.dt > 0 ? spec.dt : spec.T / 4096.0;

  // fixed smooth profiles for the forcing and the data shift
  const SpectralField profile = field_from_function(grid, [&](double x) {
    return std::polar(std::exp(-x * x / (2.0 * 1.5 * 1.5)),
                      2.0 * M_PI * 0.3 * x);
  });

  const auto compute = [&](double eps, double dt_scale, int node_scale,
                           bool& diverged) -> double {
    const TorusGrid g = make_grid(spec.length, spec.points * node_scale);
    const SpectralField u0 = make_init(g, spec.init);
    const SpectralField prof = field_from_function(g, [&](double x) {
      return std::polar(std::exp(-x * x / (2.0 * 1.5 * 1.5)),
                        2.0 * M_PI * 0.3 * x);
    });
    const double T = spec.T;
    const double dts = dt * dt_scale;
    const long steps = std::lround(std::ceil(T / dts - 1e-12));
    const int stride = std::max(1L, steps / 64);
    try {
      Trajectory base, pert;
      if (spec.perturb_data) {
        base = evolve(spec.model, u0, T, scheme_for(spec.model, dts), stride);
        pert = evolve(spec.model, u0 + eps * prof, T,
                      scheme_for(spec.model, dts), stride);
      } else {
        const Forcing forcing = [&, eps](double t) {
          return (eps * std::sin(M_PI * t / T)) * prof;
        };
        base = evolve(spec.model, u0, T, StepScheme::lawson(dts), stride);
        pert = evolve(spec.model, u0, T, StepScheme::lawson(dts), stride,
                      forcing);
      }
      const double d = spacetime_norm(difference(pert, base), 6.0, 6.0).value;
      diverged = !std::isfinite(d) || d > 10.0 * (1.0 + std::sqrt(mass(u0)));
      return d;
    } catch (const std::runtime_error&) {
      diverged = true;
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  const int nrows = static_cast<int>(spec.eps_list.size());
  std::vector<double> diffs(nrows);
  std::vector<char> flags(nrows, 0);
  parallel_for(nrows, [&](int i) {
    bool div = false;
    diffs[i] = compute(spec.eps_list[i], 1.0, 1, div);
    flags[i] = div ? 1 : 0;
  });

  std::vector<double> lx, ly;
  for (int i = 0; i < nrows; ++i)
    if (!flags[i]) {
      lx.push_back(std::log(spec.eps_list[i]));
      ly.push_back(std::log(std::max(diffs[i], 1e-300)));
    }
  const double slope = lx.size() >= 2 ? least_squares_slope(lx, ly)
                                      : std::numeric_limits<double>::quiet_NaN();

  // firewall on the first and last non-flagged rows
  int first = -1, last = -1;
  for (int i = 0; i < nrows; ++i)
    if (!flags[i]) {
      if (first < 0) first = i;
      last = i;
    }
  bool fw_ok = false;
  double fw_first = 0, fw_last = 0;
  if (first >= 0) {
    bool d1 = false, d2 = false;
    fw_first = compute(spec.eps_list[first], 0.5, 2, d1);
    fw_last = compute(spec.eps_list[last], 0.5, 2, d2);
    fw_ok = !d1 && !d2 && within_rel(fw_first, diffs[first], 0.10) &&
            within_rel(fw_last, diffs[last], 0.10);
  }

  ExperimentReport rep;
  rep.kind = "stability";
  rep.sweep_key = "eps";
  rep.seed = spec.seed;
  rep.columns = {"diff_l6", "diverged"};
  for (int i = 0; i < nrows; ++i)
    rep.rows.push_back(
        {spec.eps_list[i], {diffs[i], flags[i] ? 1.0 : 0.0}});
  rep.provenance = {{"T", spec.T},
                    {"dt", dt},
                    {"slope", slope},
                    {"mode", spec.perturb_data ? 1.0 : 0.0},
                    {"firewall_first", fw_first},
                    {"firewall_last", fw_last}};
  rep.add_verdict("slope_one_pm_02",
                  std::isfinite(slope) && std::abs(slope - 1.0) <= 0.2);
  rep.add_verdict("discretization_firewall", fw_ok);
  return rep;
}

}  // namespace nlslab
