#pragma once

#include <functional>

#include "nlslab/fft.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

// One complex Fourier coefficient per lattice mode; the spectral side is
// canonical.  Normalization: u_hat_k = (1/L) int u e^{-2 pi i k x / L} dx,
// so u(x) = sum_k u_hat_k e^{2 pi i k x / L} and
// ||u||_{L^2}^2 = L sum_k |u_hat_k|^2.
struct SpectralField {
  TorusGrid grid;
  CVec coef;
};

SpectralField zero_field(const TorusGrid& grid);

// Analysis: node samples -> spectral coefficients.  Throws on size mismatch.
SpectralField field_from_samples(const TorusGrid& grid, const CVec& samples);
// Synthesis: spectral coefficients -> node samples.
CVec to_samples(const SpectralField& f);

// Builds a field from a pointwise function of the node coordinate
// (centered in [-L/2, L/2)).
SpectralField field_from_function(const TorusGrid& grid,
                                  const std::function<Complex(double)>& fn);

// L^2 mass via Plancherel: L * sum |u_hat|^2.
double mass(const SpectralField& f);
// Physical-side mass (node quadrature), used by Plancherel checks.
double mass_physical(const SpectralField& f);

// inner(f, g) = L sum f_hat conj(g_hat) = int f conj(g).
Complex inner(const SpectralField& f, const SpectralField& g);

// L^p norm by node quadrature with weight L/points; p = infinity -> max.
double lp_norm(const SpectralField& f, double p);

// (1/2) int |u_x|^2 via the exact spectral sum.
double kinetic_energy(const SpectralField& f);

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(Complex s, const SpectralField& a);
SpectralField operator*(double s, const SpectralField& a);

double l2_distance(const SpectralField& a, const SpectralField& b);

}  // namespace nlslab
