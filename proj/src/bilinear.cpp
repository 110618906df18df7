#include "nlslab/bilinear.hpp"

#include <cmath>
#include <stdexcept>

#include "nlslab/rng.hpp"

namespace nlslab {

namespace {

// Random shell data localized in space: white coefficients on the dyadic
// shell, windowed by a Gaussian of width `width`, renormalized to unit mass.
SpectralField random_packet(const TorusGrid& grid, double shell, double width,
                            SplitMix64& rng) {
  CVec coef = CVec::Zero(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double a = std::abs(grid.freq(i));
    if (a > shell && a <= 2.0 * shell)
      coef[i] = Complex(rng.gaussian(), rng.gaussian());
  }
  SpectralField f{grid, coef};
  CVec s = to_samples(f);
  for (int j = 0; j < grid.points; ++j) {
    const double x = grid.node_centered(j);
    s[j] *= std::exp(-x * x / (2.0 * width * width));
  }
  f = field_from_samples(grid, s);
  const double m = mass(f);
  if (m > 0.0) f.coef /= std::sqrt(m);
  return f;
}

}  // namespace

NormReport bilinear_check(double M, double N, int trial_count,
                          std::uint64_t seed, double T,
                          const BilinearSetup& setup) {
  if (!(N >= 10.0 * M))
    throw std::invalid_argument("bilinear_check: requires N >= 10 M");
  const TorusGrid grid = make_grid(setup.L, setup.points);
  if (2.0 * N >= grid.nyquist())
    throw std::invalid_argument("bilinear_check: shell N unresolvable");
  if (std::floor(M * setup.L) < 1.0)
    throw std::invalid_argument("bilinear_check: shell M below the lattice");

  const int nt = setup.time_samples;
  double best = 0.0;
  for (int trial = 0; trial < trial_count; ++trial) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(trial));
    SpectralField uM =
        random_packet(grid, M, setup.packet_width_factor / M, rng);
    SpectralField vN =
        random_packet(grid, N, setup.packet_width_factor / N, rng);

    // || u_M v_N ||_{L^3_{t,x}}^3 by trapezoid over nt+1 times
    std::vector<double> cube(nt + 1);
    for (int i = 0; i <= nt; ++i) {
      const double t = T * i / nt;
      const CVec a = to_samples(linear_flow(uM, t));
      const CVec b = to_samples(linear_flow(vN, t));
      double acc = 0.0;
      for (int j = 0; j < grid.points; ++j) {
        const double w = std::abs(a[j] * b[j]);
        acc += w * w * w;
      }
      cube[i] = acc * grid.spacing();
    }
    double integral = 0.0;
    for (int i = 0; i < nt; ++i)
      integral += 0.5 * (cube[i] + cube[i + 1]) * (T / nt);
    const double norm3 = std::cbrt(integral);
    const double denom =
        std::pow(M / N, 0.25) * std::sqrt(mass(uM)) * std::sqrt(mass(vN));
    if (denom > 0.0) best = std::max(best, norm3 / denom);
  }

  NormReport rep;
  rep.label = "bilinear L3 ratio";
  rep.value = best;
  rep.params = {{"M", M}, {"N", N}, {"T", T},
                {"trials", static_cast<double>(trial_count)},
                {"seed", static_cast<double>(seed)}};
  rep.grid_points = grid.points;
  rep.time_samples = nt + 1;
  return rep;
}

}  // namespace nlslab
