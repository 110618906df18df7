#pragma once

#include <functional>
#include <vector>

#include "nlslab/model.hpp"

namespace nlslab {

enum class SchemeKind { StrangExact, LawsonRK4 };

struct StepScheme {
  SchemeKind kind = SchemeKind::StrangExact;
  double dt = 0.0;  // <= 0 selects the default rule T * 2^-14

  static StepScheme strang(double dt = 0.0) {
    return {SchemeKind::StrangExact, dt};
  }
  static StepScheme lawson(double dt = 0.0) {
    return {SchemeKind::LawsonRK4, dt};
  }
};

std::string scheme_name(SchemeKind k);

// Time-stamped sequence of spectral snapshots from one evolution.
struct Trajectory {
  std::string model_label;
  TorusGrid grid;
  std::vector<double> times;
  std::vector<CVec> snapshots;
  std::string scheme_id;
  double dt_used = 0.0;

  SpectralField at(int i) const { return {grid, snapshots[i]}; }
  int size() const { return static_cast<int>(times.size()); }
};

// Exact free flow e^{i t d_xx}: u_hat_k -> e^{-4 pi^2 i t xi_k^2} u_hat_k.
SpectralField linear_flow(const SpectralField& f, double t);

// The right-hand nonlinearity N(u) of i u_t + u_xx = N(u), per variant,
// products dealiased.  For torus_truncated, warns (stderr, once) when the
// input has mass above the N_cut band.
SpectralField nonlinear_term(const ModelSpec& model, const SpectralField& f);

// Exact flow of i u_t = w(x) |u|^4 u over dt: u -> u e^{-i w |u|^4 dt}.
// weight_nodes holds w at the collocation nodes.
SpectralField quintic_phase_substep(const SpectralField& f, double dt,
                                    const RVec& weight_nodes);

// Optional time-dependent forcing e(t): the equation becomes
// i u_t + u_xx = N(u) + e(t).
using Forcing = std::function<SpectralField(double)>;

SpectralField step(const SpectralField& f, const ModelSpec& model,
                   const StepScheme& scheme, double t0 = 0.0,
                   const Forcing& forcing = nullptr);

// Evolves u0 over [0, T] (T < 0 integrates backward), sampling every
// sample_stride steps plus both endpoints.  Throws on NaN/overflow with a
// diagnostic naming the time reached.  Strang requires a pointwise
// nonlinearity; projected variants require Lawson-RK4.
Trajectory evolve(const ModelSpec& model, const SpectralField& u0, double T,
                  const StepScheme& scheme, int sample_stride = 64,
                  const Forcing& forcing = nullptr);

// Default-dt rule: dt = |T| * 2^-14, halved (at most 4 times) until the
// relative mass drift over [0, T] is below 1e-9.
double default_dt(const ModelSpec& model, const SpectralField& u0, double T,
                  SchemeKind kind);

// || evolve_backward(evolve_forward(u0)) - u0 ||_{L^2}.
double reverse_check(const ModelSpec& model, const SpectralField& u0, double T,
                     const StepScheme& scheme);

double relative_mass_drift(const Trajectory& traj);
double relative_energy_drift(const Trajectory& traj, const ModelSpec& model);

}  // namespace nlslab
