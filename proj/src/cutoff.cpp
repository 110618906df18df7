#include "nlslab/cutoff.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlslab/bump.hpp"
#include "nlslab/transfer.hpp"

namespace nlslab {

namespace {

// Level-j profile as a function of the wrapped distance d from the window
// center: 1 for |d| <= flat, smoothstep ramp down over 2G, 0 beyond.
double mask_value(double d, double flat, double G) {
  const double a = std::abs(d);
  if (a <= flat) return 1.0;
  if (a >= flat + 2.0 * G) return 0.0;
  return 1.0 - smoothstep((a - flat) / (2.0 * G));
}

}  // namespace

SpectralField rotate_nodes(const SpectralField& f, long shift) {
  const int n = f.grid.points;
  CVec s = to_samples(f);
  CVec out(n);
  for (int j = 0; j < n; ++j) out[j] = s[(((j + shift) % n) + n) % n];
  return field_from_samples(f.grid, out);
}

SpectralField place_window(const SpectralField& torus_field,
                           const TorusGrid& line_grid, double cut_point) {
  const TorusGrid& tg = torus_field.grid;
  const long r = std::lround((cut_point - tg.length / 2.0) / tg.spacing());
  return pull_back(rotate_nodes(torus_field, r), line_grid, 0.0, tg.length);
}

SpectralField fold_window(const SpectralField& line_field,
                          const TorusGrid& torus_grid, double cut_point) {
  const long r =
      std::lround((cut_point - torus_grid.length / 2.0) / torus_grid.spacing());
  return rotate_nodes(push_forward(line_field, torus_grid), -r);
}

CutoffSet build_cutoffs(double D, double K, double T, double eta,
                        const SpectralField& u0_torus,
                        const TorusGrid& line_grid) {
  const TorusGrid& tg = u0_torus.grid;
  const double L = tg.length;
  if (!(D > 0 && K > 0 && T > 0 && eta > 0))
    throw std::invalid_argument("build_cutoffs: parameters must be positive");
  const double G = D * K * T / eta;
  const double dx = tg.spacing();

  if (44.0 * G > L)
    throw std::runtime_error(
        "build_cutoffs: no admissible window, L = " + std::to_string(L) +
        " is too small for the layout span 44 DKT/eta = " +
        std::to_string(44.0 * G));
  if (G < 4.0 * dx)
    throw std::runtime_error(
        "build_cutoffs: grid too coarse, DKT/eta = " + std::to_string(G) +
        " is below 4 node spacings");

  // Interval scan over [L/4, L/2]: the cut point is the node whose
  // surrounding arc of half-width 20G carries the least mass of the
  // periodized data.
  const CVec samples = to_samples(u0_torus);
  const int n = tg.points;
  std::vector<double> prefix(n + 1, 0.0);
  for (int j = 0; j < n; ++j)
    prefix[j + 1] = prefix[j] + std::norm(samples[j]) * dx;
  const double total = prefix[n];
  const auto arc_mass = [&](int jc, int halfwidth_nodes) {
    const int lo = jc - halfwidth_nodes;
    const int hi = jc + halfwidth_nodes;
    if (hi - lo + 1 >= n) return total;
    const int a = ((lo % n) + n) % n;
    const int b = ((hi % n) + n) % n;
    if (a <= b) return prefix[b + 1] - prefix[a];
    return (prefix[n] - prefix[a]) + prefix[b + 1];
  };

  const int zone_nodes = static_cast<int>(std::ceil(20.0 * G / dx)) + 1;
  const int j_lo = static_cast<int>(std::ceil(L / 4.0 / dx));
  const int j_hi = static_cast<int>(std::floor(L / 2.0 / dx));
  int best_j = -1;
  double best_mass = std::numeric_limits<double>::infinity();
  for (int jc = j_lo; jc <= j_hi; ++jc) {
    const double m = arc_mass(jc, zone_nodes);
    if (m < best_mass) {
      best_mass = m;
      best_j = jc;
    }
  }
  if (best_j < 0 || best_mass > eta * eta)
    throw std::runtime_error(
        "build_cutoffs: no low-mass window found on [L/4, L/2] (smallest arc "
        "mass " +
        std::to_string(best_mass) +
        " exceeds eta^2 = " + std::to_string(eta * eta) + "); increase L");

  CutoffSet cs;
  cs.line_grid = line_grid;
  cs.D = D;
  cs.K = K;
  cs.T = T;
  cs.eta = eta;
  cs.L = L;
  cs.gap_unit = G;
  cs.center_torus = best_j * dx;
  cs.window_center_line = 0.0;
  cs.slope_bound = eta / (D * K * T);
  cs.gap_bound = G;
  cs.scanned_zone_mass = best_mass;

  const int nl = line_grid.points;
  for (int lvl = 0; lvl < 5; ++lvl) {
    const double flat = L / 2.0 - (20.0 - 4.0 * lvl) * G;
    RVec m(nl);
    for (int j = 0; j < nl; ++j) {
      double d = line_grid.node(j) - cs.window_center_line;
      d -= line_grid.length * std::floor(d / line_grid.length + 0.5);
      m[j] = mask_value(d, flat, G);
    }
    cs.masks[lvl] = std::move(m);
  }

  const double dxl = line_grid.spacing();
  for (int lvl = 0; lvl < 5; ++lvl) {
    double s = 0.0;
    for (int j = 0; j + 1 < nl; ++j)
      s = std::max(s, std::abs(cs.masks[lvl][j + 1] - cs.masks[lvl][j]) / dxl);
    cs.max_slope[lvl] = s;
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const double supp_i = L / 2.0 - (20.0 - 4.0 * i) * G + 2.0 * G;
    const double flat_next = L / 2.0 - (20.0 - 4.0 * (i + 1)) * G;
    min_gap = std::min(min_gap, flat_next - supp_i);
  }
  cs.min_support_gap = min_gap;

  const SpectralField placed =
      place_window(u0_torus, line_grid, cs.center_torus);
  for (int lvl = 0; lvl < 5; ++lvl) {
    const RVec one_minus = RVec::Ones(nl) - cs.masks[lvl];
    cs.residual_mass[lvl] = std::sqrt(mass(apply_mask(placed, one_minus)));
  }
  return cs;
}

}  // namespace nlslab
