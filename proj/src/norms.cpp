#include "nlslab/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

// L^q in time of per-sample values g(t_i) >= 0: trapezoid of g^q, or max.
double time_lq(const std::vector<double>& times, const std::vector<double>& g,
               double q, int stride) {
  std::vector<double> ts, vs;
  for (size_t i = 0; i < times.size(); i += stride) {
    ts.push_back(times[i]);
    vs.push_back(g[i]);
  }
  if (ts.back() != times.back()) {
    ts.push_back(times.back());
    vs.push_back(g.back());
  }
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : vs) m = std::max(m, v);
    return m;
  }
  double acc = 0.0;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    const double a = std::pow(vs[i], q), b = std::pow(vs[i + 1], q);
    acc += 0.5 * (a + b) * std::abs(ts[i + 1] - ts[i]);
  }
  return std::pow(acc, 1.0 / q);
}

}  // namespace

NormReport spacetime_norm(const Trajectory& traj, double q, double r) {
  if (traj.size() < 2)
    throw std::invalid_argument("spacetime_norm: need at least 2 samples");
  std::vector<double> g(traj.size());
  for (int i = 0; i < traj.size(); ++i) g[i] = lp_norm(traj.at(i), r);

  const double full = time_lq(traj.times, g, q, 1);
  const double coarse = time_lq(traj.times, g, q, 2);

  NormReport rep;
  rep.label = "L^" + std::to_string(q) + "_t L^" + std::to_string(r) + "_x";
  rep.value = full;
  rep.params = {{"q", q}, {"r", r}};
  rep.grid_points = traj.grid.points;
  rep.time_samples = traj.size();
  rep.quadrature_error_estimate = std::abs(full - coarse);
  return rep;
}

NormReport strichartz_S(const Trajectory& traj) {
  const NormReport sup2 =
      spacetime_norm(traj, std::numeric_limits<double>::infinity(), 2.0);
  const NormReport l5l10 = spacetime_norm(traj, 5.0, 10.0);
  NormReport rep;
  rep.label = "S";
  rep.value = sup2.value + l5l10.value;
  rep.grid_points = traj.grid.points;
  rep.time_samples = traj.size();
  rep.quadrature_error_estimate =
      sup2.quadrature_error_estimate + l5l10.quadrature_error_estimate;
  return rep;
}

Trajectory difference(const Trajectory& a, const Trajectory& b) {
  if (a.size() != b.size() || !(a.grid == b.grid))
    throw std::invalid_argument("difference: trajectories incompatible");
  for (int i = 0; i < a.size(); ++i)
    if (std::abs(a.times[i] - b.times[i]) >
        1e-12 * std::max(1.0, std::abs(a.times[i])))
      throw std::invalid_argument("difference: sample times differ");
  Trajectory d = a;
  d.model_label = a.model_label + " - " + b.model_label;
  for (int i = 0; i < a.size(); ++i) d.snapshots[i] = a.snapshots[i] - b.snapshots[i];
  return d;
}

}  // namespace nlslab
