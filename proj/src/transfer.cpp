#include "nlslab/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

SpectralField apply_mask(const SpectralField& f, const RVec& mask_nodes) {
  if (mask_nodes.size() != f.grid.points)
    throw std::invalid_argument("apply_mask: mask size mismatch");
  CVec s = to_samples(f);
  for (int j = 0; j < s.size(); ++j) s[j] *= mask_nodes[j];
  return field_from_samples(f.grid, s);
}

namespace {

int period_factor(const TorusGrid& line, const TorusGrid& torus) {
  if (line.points % torus.points != 0)
    throw std::invalid_argument("transfer: incompatible grid sizes");
  const int P = line.points / torus.points;
  if (std::abs(line.length - P * torus.length) > 1e-9 * torus.length)
    throw std::invalid_argument("transfer: node spacings differ");
  return P;
}

}  // namespace

SpectralField push_forward(const SpectralField& line_field,
                           const TorusGrid& torus_grid) {
  const int P = period_factor(line_field.grid, torus_grid);
  CVec line = to_samples(line_field);
  CVec out = CVec::Zero(torus_grid.points);
  for (int j = 0; j < line.size(); ++j) out[j % torus_grid.points] += line[j];
  (void)P;
  return field_from_samples(torus_grid, out);
}

SpectralField pull_back(const SpectralField& torus_field,
                        const TorusGrid& line_grid, double window_center,
                        double window_len) {
  period_factor(line_grid, torus_field.grid);
  if (window_len > torus_field.grid.length * (1.0 + 1e-12))
    throw std::invalid_argument(
        "pull_back: window longer than the torus circumference");
  const CVec g = to_samples(torus_field);
  const int n = torus_field.grid.points;
  const double Ll = line_grid.length;
  CVec out = CVec::Zero(line_grid.points);
  for (int j = 0; j < line_grid.points; ++j) {
    double d = line_grid.node(j) - window_center;
    d -= Ll * std::floor(d / Ll + 0.5);  // wrap to [-Ll/2, Ll/2)
    if (d >= -window_len / 2 && d < window_len / 2) out[j] = g[j % n];
  }
  return field_from_samples(line_grid, out);
}

}  // namespace nlslab
