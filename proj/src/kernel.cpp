#include "nlslab/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "nlslab/bump.hpp"
#include "nlslab/parallel.hpp"

namespace nlslab {

Complex dispersive_kernel(double L, double N, double t, double x) {
  const long Nmax = static_cast<long>(std::ceil(2.0 * L * N));
  Complex acc = 0.0;
  for (long n = -Nmax; n <= Nmax; ++n) {
    const double w = bump(n / (L * N));
    if (w == 0.0) continue;
    const double phase =
        2.0 * M_PI * x * n / L - 4.0 * M_PI * M_PI * t * n * n / (L * L);
    acc += w * std::polar(1.0, phase);
  }
  return acc / L;
}

CVec kernel_x_profile(double L, double N, double t, int m) {
  const long Nmax = static_cast<long>(std::ceil(2.0 * L * N));
  CVec folded = CVec::Zero(m);
  for (long n = -Nmax; n <= Nmax; ++n) {
    const double w = bump(n / (L * N));
    if (w == 0.0) continue;
    const double phase = -4.0 * M_PI * M_PI * t * n * n / (L * L);
    folded[static_cast<int>(((n % m) + m) % m)] += w * std::polar(1.0, phase);
  }
  // x_j = j L / m: e^{2 pi i x_j n / L} = e^{2 pi i j n / m}, an inverse DFT
  // of the folded coefficients.
  return idft(folded) / L;
}

NormReport kernel_dispersive_constant(double L, double N, double T,
                                      double t_min, int x_samples,
                                      int t_samples) {
  if (!(t_min > 0.0 && t_min < T))
    throw std::invalid_argument(
        "kernel_dispersive_constant: need 0 < t_min < T");
  if (t_samples < 2) t_samples = 2;

  std::vector<double> sup(t_samples, 0.0);
  std::vector<int> arg(t_samples, 0);
  std::vector<double> ts(t_samples);
  for (int i = 0; i < t_samples; ++i)
    ts[i] = t_min + (T - t_min) * i / (t_samples - 1.0);

  parallel_for(t_samples, [&](int i) {
    const CVec prof = kernel_x_profile(L, N, ts[i], x_samples);
    double best = 0.0;
    int bestj = 0;
    for (int j = 0; j < prof.size(); ++j) {
      const double v = std::abs(prof[j]);
      if (v > best) {
        best = v;
        bestj = j;
      }
    }
    sup[i] = std::sqrt(std::abs(ts[i])) * best;
    arg[i] = bestj;
  });

  int imax = 0;
  for (int i = 1; i < t_samples; ++i)
    if (sup[i] > sup[imax]) imax = i;

  NormReport rep;
  rep.label = "sup |t|^1/2 |K_N^L|";
  rep.value = sup[imax];
  rep.params = {{"L", L},
                {"N", N},
                {"T", T},
                {"t_min", t_min},
                {"argmax_t", ts[imax]},
                {"argmax_x", arg[imax] * L / x_samples}};
  rep.grid_points = x_samples;
  rep.time_samples = t_samples;
  // refinement estimate: coarsen the t grid by 2
  double coarse = 0.0;
  for (int i = 0; i < t_samples; i += 2) coarse = std::max(coarse, sup[i]);
  rep.quadrature_error_estimate = std::abs(rep.value - coarse);
  return rep;
}

OscillatorySumCheck oscillatory_sum_check(double x, double t, double L,
                                          double M) {
  const long Nmax = std::max(1L, static_cast<long>(std::ceil(2.0 * M)));
  const auto Phi = [&](double n) {
    return 2.0 * M_PI * x * n / L - 4.0 * M_PI * M_PI * t * n * n / (L * L);
  };
  OscillatorySumCheck out;
  Complex acc = 0.0;
  double s1 = std::numeric_limits<double>::infinity();
  double s2 = 0.0;
  for (long n = -Nmax; n <= Nmax; ++n) {
    const double w = M > 0.0 ? bump(n / M) : 0.0;  // M <= 0: empty profile
    if (w != 0.0) acc += w * std::polar(1.0, Phi(static_cast<double>(n)));
    const double d1 = std::abs(Phi(n + 1.0) - Phi(static_cast<double>(n)));
    const double d2 = std::abs(Phi(n + 1.0) - 2.0 * Phi(static_cast<double>(n)) +
                               Phi(n - 1.0));
    s1 = std::min(s1, d1);
    s2 = std::max(s2, d2);
  }
  out.value = std::abs(acc) / L;
  out.s1 = s1;
  out.s2 = s2;
  out.vacuous = !(s1 > 0.0);
  if (!out.vacuous) {
    out.bound = 1.0 / (L * s1) + M * s2 / (L * s1 * s1);
    out.ratio = out.value / out.bound;
  }
  return out;
}

}  // namespace nlslab
