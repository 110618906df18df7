#pragma once

#include "nlslab/fft.hpp"
#include "nlslab/norms.hpp"

namespace nlslab {

// The band-limited free kernel on the rescaled torus:
//   K_N^L(t, x) = (1/L) sum_n e^{i(2 pi x n / L - 4 pi^2 t n^2 / L^2)}
//                 bump(n / (L N)),
// summed over the support |n| <= 2 L N.
Complex dispersive_kernel(double L, double N, double t, double x);

// K_N^L(t, .) on the m-point x-lattice x_j = j L / m, evaluated exactly by
// folding the mode sum (one FFT per t).
CVec kernel_x_profile(double L, double N, double t, int m);

// sup over the (t, x) sample grid of |t|^{1/2} |K_N^L(t, x)|, with the
// argmax location recorded in params.  t runs over t_samples points of
// [t_min, T]; x over the x_samples-point lattice.
NormReport kernel_dispersive_constant(double L, double N, double T,
                                      double t_min, int x_samples,
                                      int t_samples);

struct OscillatorySumCheck {
  double value = 0.0;   // |(1/L) sum e^{i Phi(n)} f(n/M)|
  double bound = 0.0;   // 1/(L s1) + M s2 / (L s1^2), unit constant
  double s1 = 0.0;      // min |Phi(n+1) - Phi(n)| over the support
  double s2 = 0.0;      // max |second difference|
  double ratio = 0.0;   // value / bound (0 when vacuous)
  bool vacuous = false; // s1 == 0 somewhere on the range
};

// Abel-summation bound check for the kernel-type phase
// Phi(n) = 2 pi x n / L - 4 pi^2 t n^2 / L^2 with profile bump(n/M).
OscillatorySumCheck oscillatory_sum_check(double x, double t, double L,
                                          double M);

}  // namespace nlslab
