#include "nlslab/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "nlslab/bump.hpp"

namespace nlslab {

bool is_dyadic(double D) {
  if (!(D > 0.0) || !std::isfinite(D)) return false;
  const double l = std::log2(D);
  return std::abs(l - std::round(l)) < 1e-12;
}

double eval_mD(double xi, double D) {
  if (!is_dyadic(D) || D < 2.0)
    throw std::invalid_argument("eval_mD: D must be a dyadic integer >= 2");
  const int terms = static_cast<int>(std::lround(std::log2(2.0 * D)));
  double acc = 0.0;
  double N = 1.0;
  for (int j = 0; j < terms; ++j, N *= 2.0) acc += bump(xi / N);
  return acc / terms;
}

Multiplier sharp_low(double N) {
  return {"sharp_low(" + std::to_string(N) + ")",
          [N](double xi) { return std::abs(xi) <= N ? 1.0 : 0.0; }};
}

Multiplier sharp_shell(double N) {
  return {"sharp_shell(" + std::to_string(N) + ")", [N](double xi) {
            const double a = std::abs(xi);
            return (a > N && a <= 2.0 * N) ? 1.0 : 0.0;
          }};
}

Multiplier smooth_low(double N) {
  return {"smooth_low(" + std::to_string(N) + ")",
          [N](double xi) { return bump(xi / N); }};
}

Multiplier smooth_shell(double N) {
  return {"smooth_shell(" + std::to_string(N) + ")", [N](double xi) {
            return bump(xi / (2.0 * N)) - bump(xi / N);
          }};
}

Multiplier truncation_mD(double D) {
  if (!is_dyadic(D) || D < 2.0)
    throw std::invalid_argument("truncation_mD: D must be dyadic >= 2");
  return {"mD(" + std::to_string(D) + ")",
          [D](double xi) { return eval_mD(xi, D); }};
}

Multiplier truncation_mD_rescaled(double D, double K) {
  if (!is_dyadic(D) || D < 2.0)
    throw std::invalid_argument("truncation_mD_rescaled: D must be dyadic >= 2");
  if (!is_dyadic(K))
    throw std::invalid_argument("truncation_mD_rescaled: K must be dyadic");
  return {"mD(" + std::to_string(D) + ")/K=" + std::to_string(K),
          [D, K](double xi) { return eval_mD(xi / K, D); }};
}

Multiplier helmholtz_inverse() {
  return {"helmholtz_inverse", [](double xi) {
            const double w = 2.0 * M_PI * xi;
            return 1.0 / (1.0 + w * w);
          }};
}

Multiplier custom(std::string label, std::function<double(double)> symbol) {
  return {std::move(label), std::move(symbol)};
}

SpectralField apply_multiplier(const SpectralField& f, const Multiplier& m) {
  SpectralField out = f;
  for (int i = 0; i < f.grid.points; ++i) out.coef[i] *= m(f.grid.freq(i));
  return out;
}

SpectralField apply_derivative(const SpectralField& f, const Multiplier& m) {
  SpectralField out = f;
  for (int i = 0; i < f.grid.points; ++i) {
    const double xi = f.grid.freq(i);
    out.coef[i] *= Complex(0.0, 2.0 * M_PI * xi * m(xi));
  }
  return out;
}

}  // namespace nlslab
