#include "nlslab/homog.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

NormReport homogenization_defect(const CoefficientSpec& h, int n, double R,
                                 bool derivative) {
  if (n < 1) throw std::invalid_argument("homogenization_defect: n >= 1");
  const double hbar = h.mean();

  // resolve the oscillation: h(n x) has modes at multiples of n; tables
  // carry at most table.size()/2 harmonics of the unit period.
  int harmonics = 1;
  if (h.kind == CoefficientSpec::Kind::Table)
    harmonics = static_cast<int>(h.table.size()) / 2;
  int pts = 1024;
  while (pts < 8 * n * harmonics && pts < (1 << 22)) pts *= 2;

  const TorusGrid grid = make_grid(1.0, pts);
  CVec s(pts);
  for (int j = 0; j < pts; ++j)
    s[j] = h(static_cast<double>(n) * grid.node(j)) - hbar;
  SpectralField f = field_from_samples(grid, s);
  f = derivative ? apply_derivative(f, helmholtz_inverse())
                 : apply_multiplier(f, helmholtz_inverse());
  const CVec g = to_samples(f);

  double sup = 0.0;
  for (int j = 0; j < pts; ++j) {
    if (std::abs(grid.node_centered(j)) <= std::min(R, 0.5))
      sup = std::max(sup, std::abs(g[j]));
  }

  NormReport rep;
  rep.label = derivative ? "sup |d_x (-d_xx+1)^{-1}(h(n.)-hbar)|"
                         : "sup |(-d_xx+1)^{-1}(h(n.)-hbar)|";
  rep.value = sup;
  rep.params = {{"n", static_cast<double>(n)},
                {"R", R},
                {"hbar", hbar},
                {"derivative", derivative ? 1.0 : 0.0}};
  rep.grid_points = pts;
  rep.time_samples = 1;
  return rep;
}

}  // namespace nlslab
