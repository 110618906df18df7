#include "nlslab/propagator.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "nlslab/dealias.hpp"

namespace nlslab {

std::string scheme_name(SchemeKind k) {
  return k == SchemeKind::StrangExact ? "strang_exact" : "lawson_rk4";
}

SpectralField linear_flow(const SpectralField& f, double t) {
  SpectralField out = f;
  const double c = -4.0 * M_PI * M_PI * t;
  for (int i = 0; i < f.grid.points; ++i) {
    const double xi = f.grid.freq(i);
    out.coef[i] *= std::polar(1.0, c * xi * xi);
  }
  return out;
}

namespace {

double band_mass_above(const SpectralField& f, double cut) {
  double acc = 0.0;
  for (int i = 0; i < f.grid.points; ++i)
    if (std::abs(f.grid.freq(i)) > cut) acc += std::norm(f.coef[i]);
  return f.grid.length * acc;
}

}  // namespace

SpectralField nonlinear_term(const ModelSpec& model, const SpectralField& f) {
  switch (model.variant) {
    case Variant::Free:
      return zero_field(f.grid);
    case Variant::Quintic: {
      SpectralField out = quintic_term(f);
      out.coef *= model.lambda;
      return out;
    }
    case Variant::AlphaTruncated: {
      SpectralField pu = model.P ? apply_multiplier(f, *model.P) : f;
      SpectralField out = quintic_term(pu);
      if (model.P) out = apply_multiplier(out, *model.P);
      const double a = model.alpha;
      out.coef *= a * a * a * a * a * a;
      return out;
    }
    case Variant::DTruncated: {
      const Multiplier P = truncation_mD(model.D);
      return apply_multiplier(quintic_term(apply_multiplier(f, P)), P);
    }
    case Variant::RescaledTruncated: {
      const Multiplier P = truncation_mD_rescaled(model.D, model.K);
      return apply_multiplier(quintic_term(apply_multiplier(f, P)), P);
    }
    case Variant::TorusTruncated: {
      static thread_local bool warned = false;
      if (!warned) {
        const double leak = band_mass_above(f, model.N_cut);
        if (leak > 1e-10 * std::max(1.0, mass(f))) {
          std::cerr << "nonlinear_term: torus_truncated input has mass "
                    << leak << " above the N_cut band\n";
          warned = true;
        }
      }
      const Multiplier P = truncation_mD_rescaled(model.D, model.K);
      SpectralField out =
          apply_multiplier(quintic_term(apply_multiplier(f, P)), P);
      return apply_multiplier(out, smooth_low(model.N_cut));
    }
    case Variant::Inhomogeneous:
      // the weight samples already carry lambda
      return weighted_quintic_term(f, nonlinear_weight_padded(model, f.grid));
  }
  return zero_field(f.grid);
}

SpectralField quintic_phase_substep(const SpectralField& f, double dt,
                                    const RVec& weight_nodes) {
  if (weight_nodes.size() != f.grid.points)
    throw std::invalid_argument("quintic_phase_substep: weight size mismatch");
  if (dt == 0.0) return f;
  CVec u = to_samples(f);
  for (int j = 0; j < u.size(); ++j) {
    const double a2 = std::norm(u[j]);
    u[j] *= std::polar(1.0, -weight_nodes[j] * a2 * a2 * dt);
  }
  return field_from_samples(f.grid, u);
}

namespace {

// One Strang step: half linear / exact phase / half linear.
SpectralField strang_step(const SpectralField& f, double dt,
                          const RVec& w_nodes) {
  SpectralField u = linear_flow(f, dt / 2.0);
  u = quintic_phase_substep(u, dt, w_nodes);
  return linear_flow(u, dt / 2.0);
}

// One Lawson-RK4 step in the interaction picture; the linear part is
// applied exactly through half/full-step flows.
SpectralField lawson_step(const SpectralField& f, const ModelSpec& model,
                          double t0, double dt, const Forcing& forcing) {
  const auto rhs = [&](double t, const SpectralField& u) {
    SpectralField n = nonlinear_term(model, u);
    if (forcing) n = n + forcing(t);
    n.coef *= Complex(0.0, -1.0);
    return n;
  };
  const double h = dt;
  SpectralField k1 = rhs(t0, f);
  SpectralField fh = linear_flow(f, h / 2.0);
  SpectralField k2 = rhs(t0 + h / 2.0, fh + (h / 2.0) * linear_flow(k1, h / 2.0));
  SpectralField k3 = rhs(t0 + h / 2.0, fh + (h / 2.0) * k2);
  SpectralField fhh = linear_flow(fh, h / 2.0);
  SpectralField k4 = rhs(t0 + h, fhh + h * linear_flow(k3, h / 2.0));
  SpectralField out = fhh;
  out.coef += (h / 6.0) * (linear_flow(k1, h).coef +
                           2.0 * linear_flow(k2 + k3, h / 2.0).coef + k4.coef);
  return out;
}

void require_scheme_compatible(const ModelSpec& model, SchemeKind kind,
                               bool forced) {
  if (kind == SchemeKind::StrangExact && (!model.pointwise() || forced))
    throw std::invalid_argument(
        "strang_exact needs a pointwise unforced nonlinearity; use lawson_rk4 "
        "for " +
        model.label());
}

}  // namespace

SpectralField step(const SpectralField& f, const ModelSpec& model,
                   const StepScheme& scheme, double t0, const Forcing& forcing) {
  require_scheme_compatible(model, scheme.kind, static_cast<bool>(forcing));
  if (scheme.kind == SchemeKind::StrangExact) {
    return strang_step(f, scheme.dt, nonlinear_weight_nodes(model, f.grid));
  }
  return lawson_step(f, model, t0, scheme.dt, forcing);
}

namespace {

Trajectory evolve_fixed_dt(const ModelSpec& model, const SpectralField& u0,
                           double T, SchemeKind kind, double dt,
                           int sample_stride, const Forcing& forcing) {
  const double sign = T < 0 ? -1.0 : 1.0;
  const double Tabs = std::abs(T);
  long steps = std::max(1L, std::lround(std::ceil(Tabs / dt - 1e-12)));
  dt = Tabs / steps;

  Trajectory traj;
  traj.model_label = model.label();
  traj.grid = u0.grid;
  traj.scheme_id = scheme_name(kind);
  traj.dt_used = sign * dt;
  traj.times.push_back(0.0);
  traj.snapshots.push_back(u0.coef);

  const RVec w_nodes = kind == SchemeKind::StrangExact
                           ? nonlinear_weight_nodes(model, u0.grid)
                           : RVec();

  SpectralField u = u0;
  for (long s = 0; s < steps; ++s) {
    const double t = sign * dt * s;
    if (kind == SchemeKind::StrangExact) {
      u = strang_step(u, sign * dt, w_nodes);
    } else {
      u = lawson_step(u, model, t, sign * dt, forcing);
    }
    const bool sample = ((s + 1) % sample_stride == 0) || s + 1 == steps;
    if (sample) {
      const double m = u.coef.squaredNorm();
      if (!std::isfinite(m) || m > 1e30)
        throw std::runtime_error("evolve: state blew up at t = " +
                                 std::to_string(sign * dt * (s + 1)) +
                                 " for model " + model.label());
      traj.times.push_back(sign * dt * (s + 1));
      traj.snapshots.push_back(u.coef);
    }
  }
  return traj;
}

}  // namespace

Trajectory evolve(const ModelSpec& model, const SpectralField& u0, double T,
                  const StepScheme& scheme, int sample_stride,
                  const Forcing& forcing) {
  require_scheme_compatible(model, scheme.kind, static_cast<bool>(forcing));
  if (sample_stride < 1) sample_stride = 1;

  if (scheme.dt > 0.0)
    return evolve_fixed_dt(model, u0, T, scheme.kind, scheme.dt, sample_stride,
                           forcing);

  // Default rule: dt = |T| 2^-14, halved until mass drift < 1e-9.
  double dt = std::abs(T) * std::pow(2.0, -14);
  Trajectory traj;
  for (int attempt = 0;; ++attempt) {
    traj = evolve_fixed_dt(model, u0, T, scheme.kind, dt, sample_stride,
                           forcing);
    if (relative_mass_drift(traj) < 1e-9 || attempt >= 4) break;
    dt /= 2.0;
  }
  return traj;
}

double default_dt(const ModelSpec& model, const SpectralField& u0, double T,
                  SchemeKind kind) {
  double dt = std::abs(T) * std::pow(2.0, -14);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Trajectory probe =
        evolve_fixed_dt(model, u0, T, kind, dt, 1 << 12, nullptr);
    if (relative_mass_drift(probe) < 1e-9) break;
    dt /= 2.0;
  }
  return dt;
}

double reverse_check(const ModelSpec& model, const SpectralField& u0, double T,
                     const StepScheme& scheme) {
  StepScheme s = scheme;
  if (s.dt <= 0.0) s.dt = default_dt(model, u0, T, s.kind);
  Trajectory fwd = evolve(model, u0, T, s, 1 << 20);
  SpectralField uT = fwd.at(fwd.size() - 1);
  Trajectory bwd = evolve(model, uT, -T, s, 1 << 20);
  return l2_distance(bwd.at(bwd.size() - 1), u0);
}

double relative_mass_drift(const Trajectory& traj) {
  const double m0 = traj.grid.length * traj.snapshots.front().squaredNorm();
  if (m0 == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& c : traj.snapshots)
    worst = std::max(worst,
                     std::abs(traj.grid.length * c.squaredNorm() - m0) / m0);
  return worst;
}

double relative_energy_drift(const Trajectory& traj, const ModelSpec& model) {
  const double e0 = energy(traj.at(0), model);
  const double scale = std::max(std::abs(e0), 1e-30);
  double worst = 0.0;
  for (int i = 0; i < traj.size(); ++i)
    worst = std::max(worst, std::abs(energy(traj.at(i), model) - e0) / scale);
  return worst;
}

}  // namespace nlslab
