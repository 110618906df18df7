#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlslab/propagator.hpp"

namespace nlslab {

// A measured norm or operator-norm value with resolution metadata and a
// quadrature-error estimate.
struct NormReport {
  std::string label;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> params;
  int grid_points = 0;
  int time_samples = 0;
  double quadrature_error_estimate = 0.0;
};

// L^q_t L^r_x over the trajectory's sample times: L^r_x by node quadrature
// per snapshot, L^q_t by trapezoid (max when q = inf).  The error estimate
// comes from re-evaluating on every other sample.  Needs >= 2 samples.
NormReport spacetime_norm(const Trajectory& traj, double q, double r);

// The homogeneous Strichartz norm C^0_t L^2_x + L^5_t L^10_x.
NormReport strichartz_S(const Trajectory& traj);

// Snapshot-wise difference of two trajectories sampled at the same times.
Trajectory difference(const Trajectory& a, const Trajectory& b);

}  // namespace nlslab
