#include "nlslab/field.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

SpectralField zero_field(const TorusGrid& grid) {
  return {grid, CVec::Zero(grid.points)};
}

SpectralField field_from_samples(const TorusGrid& grid, const CVec& samples) {
  if (samples.size() != grid.points)
    throw std::invalid_argument("field_from_samples: sample count " +
                                std::to_string(samples.size()) +
                                " != grid points " +
                                std::to_string(grid.points));
  return {grid, dft(samples) / static_cast<double>(grid.points)};
}

CVec to_samples(const SpectralField& f) { return idft(f.coef); }

SpectralField field_from_function(const TorusGrid& grid,
                                  const std::function<Complex(double)>& fn) {
  CVec s(grid.points);
  for (int j = 0; j < grid.points; ++j) s[j] = fn(grid.node_centered(j));
  return field_from_samples(grid, s);
}

double mass(const SpectralField& f) {
  return f.grid.length * f.coef.squaredNorm();
}

double mass_physical(const SpectralField& f) {
  CVec s = to_samples(f);
  return s.squaredNorm() * f.grid.spacing();
}

Complex inner(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid == g.grid))
    throw std::invalid_argument("inner: fields live on different grids");
  return f.grid.length * g.coef.dot(f.coef);  // dot conjugates its receiver
}

double lp_norm(const SpectralField& f, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm: p must be in [1, infinity]");
  CVec s = to_samples(f);
  if (std::isinf(p)) return s.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (int j = 0; j < s.size(); ++j) acc += std::pow(std::abs(s[j]), p);
  return std::pow(acc * f.grid.spacing(), 1.0 / p);
}

double kinetic_energy(const SpectralField& f) {
  double acc = 0.0;
  for (int i = 0; i < f.grid.points; ++i) {
    const double omega = 2.0 * M_PI * f.grid.freq(i);
    acc += omega * omega * std::norm(f.coef[i]);
  }
  return 0.5 * f.grid.length * acc;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  return {a.grid, a.coef + b.coef};
}
SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  return {a.grid, a.coef - b.coef};
}
SpectralField operator*(Complex s, const SpectralField& a) {
  return {a.grid, s * a.coef};
}
SpectralField operator*(double s, const SpectralField& a) {
  return {a.grid, s * a.coef};
}

double l2_distance(const SpectralField& a, const SpectralField& b) {
  return std::sqrt(a.grid.length * (a.coef - b.coef).squaredNorm());
}

}  // namespace nlslab
