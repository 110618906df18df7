#include "nlslab/model.hpp"

#include <cmath>
#include <stdexcept>

#include "nlslab/dealias.hpp"

namespace nlslab {

double CoefficientSpec::operator()(double x) const {
  switch (kind) {
    case Kind::Constant:
      return constant;
    case Kind::OnePlusCos:
      return 1.0 + std::cos(2.0 * M_PI * x);
    case Kind::Table: {
      // linear interpolation of one period
      const double frac = x - std::floor(x);
      const int n = static_cast<int>(table.size());
      const double pos = frac * n;
      const int j = static_cast<int>(pos) % n;
      const double w = pos - std::floor(pos);
      return (1.0 - w) * table[j] + w * table[(j + 1) % n];
    }
  }
  return 0.0;
}

double CoefficientSpec::mean() const {
  switch (kind) {
    case Kind::Constant:
      return constant;
    case Kind::OnePlusCos:
      return 1.0;
    case Kind::Table:
      return table.size() ? table.mean() : 0.0;
  }
  return 0.0;
}

CoefficientSpec CoefficientSpec::constant_coeff(double c) {
  CoefficientSpec s;
  s.kind = Kind::Constant;
  s.constant = c;
  return s;
}

CoefficientSpec CoefficientSpec::one_plus_cos() {
  CoefficientSpec s;
  s.kind = Kind::OnePlusCos;
  return s;
}

CoefficientSpec CoefficientSpec::from_table(RVec samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("CoefficientSpec: table needs >= 2 samples");
  CoefficientSpec s;
  s.kind = Kind::Table;
  s.table = std::move(samples);
  return s;
}

std::string ModelSpec::label() const {
  switch (variant) {
    case Variant::Free:
      return "free";
    case Variant::Quintic:
      return "quintic(lambda=" + std::to_string(lambda) + ")";
    case Variant::AlphaTruncated:
      return "alpha_truncated(alpha=" + std::to_string(alpha) + ")";
    case Variant::DTruncated:
      return "d_truncated(D=" + std::to_string(D) + ")";
    case Variant::RescaledTruncated:
      return "rescaled_truncated(D=" + std::to_string(D) +
             ",K=" + std::to_string(K) + ")";
    case Variant::TorusTruncated:
      return "torus_truncated(N_cut=" + std::to_string(N_cut) +
             ",D=" + std::to_string(D) + ",K=" + std::to_string(K) + ")";
    case Variant::Inhomogeneous:
      return "inhomogeneous(n=" + std::to_string(n_osc) + ")";
  }
  return "?";
}

bool ModelSpec::pointwise() const {
  return variant == Variant::Free || variant == Variant::Quintic ||
         variant == Variant::Inhomogeneous;
}

ModelSpec ModelSpec::free() { return ModelSpec{}; }

ModelSpec ModelSpec::quintic(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("quintic: lambda must be positive");
  ModelSpec m;
  m.variant = Variant::Quintic;
  m.lambda = lambda;
  return m;
}

ModelSpec ModelSpec::alpha_truncated(double alpha,
                                     std::optional<Multiplier> P) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha_truncated: alpha must be in (0,1]");
  ModelSpec m;
  m.variant = Variant::AlphaTruncated;
  m.alpha = alpha;
  m.P = std::move(P);
  return m;
}

ModelSpec ModelSpec::d_truncated(double D) {
  if (!is_dyadic(D) || D < 2.0)
    throw std::invalid_argument("d_truncated: D must be dyadic >= 2");
  ModelSpec m;
  m.variant = Variant::DTruncated;
  m.D = D;
  return m;
}

ModelSpec ModelSpec::rescaled_truncated(double D, double K) {
  if (!is_dyadic(D) || D < 2.0)
    throw std::invalid_argument("rescaled_truncated: D must be dyadic >= 2");
  if (!is_dyadic(K))
    throw std::invalid_argument("rescaled_truncated: K must be dyadic");
  ModelSpec m;
  m.variant = Variant::RescaledTruncated;
  m.D = D;
  m.K = K;
  return m;
}

ModelSpec ModelSpec::torus_truncated(double N_cut, double D, double K) {
  if (!is_dyadic(D) || D < 2.0)
    throw std::invalid_argument("torus_truncated: D must be dyadic >= 2");
  if (!is_dyadic(K))
    throw std::invalid_argument("torus_truncated: K must be dyadic");
  if (!is_dyadic(N_cut))
    throw std::invalid_argument("torus_truncated: N_cut must be dyadic");
  ModelSpec m;
  m.variant = Variant::TorusTruncated;
  m.N_cut = N_cut;
  m.D = D;
  m.K = K;
  return m;
}

ModelSpec ModelSpec::inhomogeneous(CoefficientSpec h, int n_osc,
                                   double lambda) {
  if (n_osc < 1)
    throw std::invalid_argument("inhomogeneous: n must be a positive integer");
  if (!(lambda > 0.0))
    throw std::invalid_argument("inhomogeneous: lambda must be positive");
  ModelSpec m;
  m.variant = Variant::Inhomogeneous;
  m.h = std::move(h);
  m.n_osc = n_osc;
  m.lambda = lambda;
  return m;
}

namespace {

RVec weight_on(const ModelSpec& model, const TorusGrid& grid, int count) {
  RVec w(count);
  const double dx = grid.length / count;
  switch (model.variant) {
    case Variant::Free:
      w.setZero();
      break;
    case Variant::Quintic:
      w.setConstant(model.lambda);
      break;
    case Variant::AlphaTruncated: {
      const double a = model.alpha;
      w.setConstant(a * a * a * a * a * a);
      break;
    }
    case Variant::DTruncated:
    case Variant::RescaledTruncated:
    case Variant::TorusTruncated:
      w.setConstant(1.0);
      break;
    case Variant::Inhomogeneous:
      for (int j = 0; j < count; ++j) {
        double x = j * dx;
        if (x >= grid.length / 2) x -= grid.length;
        w[j] = model.lambda * model.h(model.n_osc * x);
      }
      break;
  }
  return w;
}

}  // namespace

RVec nonlinear_weight_padded(const ModelSpec& model, const TorusGrid& grid) {
  return weight_on(model, grid, padded_points(grid));
}

RVec nonlinear_weight_nodes(const ModelSpec& model, const TorusGrid& grid) {
  return weight_on(model, grid, grid.points);
}

double energy(const SpectralField& f, const ModelSpec& model) {
  const double kin = kinetic_energy(f);
  if (model.variant == Variant::Free) return kin;

  SpectralField pu = f;
  switch (model.variant) {
    case Variant::AlphaTruncated:
      if (model.P) pu = apply_multiplier(f, *model.P);
      break;
    case Variant::DTruncated:
      pu = apply_multiplier(f, truncation_mD(model.D));
      break;
    case Variant::RescaledTruncated:
    case Variant::TorusTruncated:
      pu = apply_multiplier(f, truncation_mD_rescaled(model.D, model.K));
      break;
    default:
      break;
  }

  RVec w;
  if (model.variant == Variant::Inhomogeneous ||
      model.variant == Variant::Quintic ||
      model.variant == Variant::AlphaTruncated) {
    w = nonlinear_weight_padded(model, f.grid);
  }
  return kin + sextic_integral(pu, w);
}

}  // namespace nlslab
