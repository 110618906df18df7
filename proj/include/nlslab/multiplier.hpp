#pragma once

#include <functional>
#include <string>

#include "nlslab/field.hpp"

namespace nlslab {

// Real bounded Fourier multiplier symbol xi -> m(xi).
struct Multiplier {
  std::string label;
  std::function<double(double)> symbol;

  double operator()(double xi) const { return symbol(xi); }
};

// Sharp indicator of |xi| <= N.
Multiplier sharp_low(double N);
// Sharp dyadic shell indicator of N < |xi| <= 2N.
Multiplier sharp_shell(double N);
// Smooth low-pass with symbol bump(xi/N); the projection of Lemma-2.1 type.
Multiplier smooth_low(double N);
// Smooth shell bump(xi/(2N)) - bump(xi/N).
Multiplier smooth_shell(double N);
// Logarithmically averaged truncation symbol m_D.
Multiplier truncation_mD(double D);
// Rescaled symbol m_D(xi/K).
Multiplier truncation_mD_rescaled(double D, double K);
// (1 + 4 pi^2 xi^2)^{-1}, the symbol of (-d_xx + 1)^{-1}.
Multiplier helmholtz_inverse();
// d/dx composed with helmholtz_inverse: 2 pi xi /(1 + 4 pi^2 xi^2),
// applied with the i factor folded in by apply_multiplier_imag below.
Multiplier custom(std::string label, std::function<double(double)> symbol);

// m_D(xi) = (1/log2(2D)) sum_{dyadic 1 <= N <= D} bump(xi/N).
// Requires D a dyadic integer >= 2; throws otherwise.
double eval_mD(double xi, double D);
bool is_dyadic(double D);

// Coefficient-wise product u_hat_k -> m(xi_k) u_hat_k.
SpectralField apply_multiplier(const SpectralField& f, const Multiplier& m);

// Applies i * 2 pi xi * m(xi): the derivative of a multiplier action.
SpectralField apply_derivative(const SpectralField& f, const Multiplier& m);

}  // namespace nlslab
