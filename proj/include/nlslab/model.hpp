#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlslab/multiplier.hpp"

namespace nlslab {

// Bounded 1-periodic coefficient h, given either as a closed-form tag or as
// one period of samples.  h(n x) enters the inhomogeneous model.
struct CoefficientSpec {
  enum class Kind { Constant, OnePlusCos, Table };
  Kind kind = Kind::Constant;
  double constant = 1.0;        // Constant: h == constant
  RVec table;                   // Table: samples of one period on [0,1)

  double operator()(double x) const;  // evaluates h at x (period 1)
  double mean() const;                // exact for tags, quadrature for tables

  static CoefficientSpec constant_coeff(double c);
  static CoefficientSpec one_plus_cos();
  static CoefficientSpec from_table(RVec samples);
};

enum class Variant {
  Free,
  Quintic,
  AlphaTruncated,
  DTruncated,
  RescaledTruncated,
  TorusTruncated,
  Inhomogeneous,
};

// Which equation variant evolves, plus its parameters.  Defocusing sign is
// fixed throughout.
struct ModelSpec {
  Variant variant = Variant::Free;
  double lambda = 1.0;                 // quintic / inhomogeneous strength
  double alpha = 1.0;                  // alpha-truncated coupling, in (0,1]
  double D = 2.0;                      // dyadic truncation parameter
  double K = 1.0;                      // dyadic rescaling parameter
  double N_cut = 0.0;                  // torus-truncated band edge (dyadic)
  std::optional<Multiplier> P;         // alpha-truncated projection (Id if unset)
  CoefficientSpec h;                   // inhomogeneous coefficient
  int n_osc = 1;                       // oscillation index of h(n x)

  std::string label() const;
  // True when the nonlinearity is a pointwise function of u (exact phase
  // substep available): free, quintic, inhomogeneous.
  bool pointwise() const;

  static ModelSpec free();
  static ModelSpec quintic(double lambda);
  static ModelSpec alpha_truncated(double alpha,
                                   std::optional<Multiplier> P = std::nullopt);
  static ModelSpec d_truncated(double D);
  static ModelSpec rescaled_truncated(double D, double K);
  static ModelSpec torus_truncated(double N_cut, double D, double K);
  static ModelSpec inhomogeneous(CoefficientSpec h, int n_osc, double lambda);
};

// Real nonlinear weight w(x) sampled on the 3x padded grid of `grid`
// (lambda for quintic, lambda h(n x) for inhomogeneous, constants for the
// projected variants).
RVec nonlinear_weight_padded(const ModelSpec& model, const TorusGrid& grid);
// Same weight on the collocation nodes (for the exact phase substep).
RVec nonlinear_weight_nodes(const ModelSpec& model, const TorusGrid& grid);

// E = 1/2 int |u_x|^2 + (w/6) int |P u|^6 with (w, P) per variant.
double energy(const SpectralField& f, const ModelSpec& model);

}  // namespace nlslab
