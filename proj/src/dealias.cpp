#include "nlslab/dealias.hpp"

#include <stdexcept>

namespace nlslab {

namespace {

// Embed n coefficients (FFT order) into m >= n slots, keeping signed modes.
CVec embed(const CVec& coef, int n, int m) {
  CVec out = CVec::Zero(m);
  const int half = n / 2;
  for (int i = 0; i < n; ++i) {
    const int k = i < half ? i : i - n;
    out[k >= 0 ? k : k + m] = coef[i];
  }
  return out;
}

// Truncate m coefficients down to the n-point band.
CVec truncate(const CVec& coef, int m, int n) {
  CVec out(n);
  const int half = n / 2;
  for (int i = 0; i < n; ++i) {
    const int k = i < half ? i : i - n;
    out[i] = coef[k >= 0 ? k : k + m];
  }
  return out;
}

}  // namespace

CVec padded_samples(const SpectralField& f) {
  const int n = f.grid.points;
  const int m = padded_points(f.grid);
  return idft(embed(f.coef, n, m));
}

SpectralField field_from_padded_samples(const TorusGrid& grid,
                                        const CVec& padded) {
  const int m = padded_points(grid);
  if (padded.size() != m)
    throw std::invalid_argument("field_from_padded_samples: bad size");
  CVec hat = dft(padded) / static_cast<double>(m);
  return {grid, truncate(hat, m, grid.points)};
}

SpectralField quintic_term(const SpectralField& f) {
  CVec u = padded_samples(f);
  for (int j = 0; j < u.size(); ++j) {
    const double a2 = std::norm(u[j]);
    u[j] *= a2 * a2;
  }
  return field_from_padded_samples(f.grid, u);
}

SpectralField weighted_quintic_term(const SpectralField& f,
                                    const RVec& weight_padded) {
  const int m = padded_points(f.grid);
  if (weight_padded.size() != m)
    throw std::invalid_argument("weighted_quintic_term: weight size mismatch");
  CVec u = padded_samples(f);
  for (int j = 0; j < m; ++j) {
    const double a2 = std::norm(u[j]);
    u[j] *= weight_padded[j] * a2 * a2;
  }
  return field_from_padded_samples(f.grid, u);
}

double sextic_integral(const SpectralField& f, const RVec& weight_padded) {
  const int m = padded_points(f.grid);
  CVec u = padded_samples(f);
  double acc = 0.0;
  if (weight_padded.size() == 0) {
    for (int j = 0; j < m; ++j) {
      const double a2 = std::norm(u[j]);
      acc += a2 * a2 * a2;
    }
  } else {
    if (weight_padded.size() != m)
      throw std::invalid_argument("sextic_integral: weight size mismatch");
    for (int j = 0; j < m; ++j) {
      const double a2 = std::norm(u[j]);
      acc += weight_padded[j] * a2 * a2 * a2;
    }
  }
  return acc * (f.grid.length / m) / 6.0;
}

}  // namespace nlslab
