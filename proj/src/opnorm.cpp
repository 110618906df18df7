#include "nlslab/opnorm.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "nlslab/rng.hpp"
#include "nlslab/transfer.hpp"

namespace nlslab {

LinOp op_identity(const TorusGrid& grid) {
  auto id = [](const SpectralField& f) { return f; };
  return {"Id", grid, grid, id, id};
}

LinOp op_multiplier(const TorusGrid& grid, const Multiplier& m) {
  auto ap = [m](const SpectralField& f) { return apply_multiplier(f, m); };
  return {m.label, grid, grid, ap, ap};
}

LinOp op_mask(const TorusGrid& grid, const RVec& mask_nodes) {
  auto ap = [mask_nodes](const SpectralField& f) {
    return apply_mask(f, mask_nodes);
  };
  return {"mask", grid, grid, ap, ap};
}

LinOp op_compose(const LinOp& A, const LinOp& B) {
  if (!(B.out == A.in))
    throw std::invalid_argument("op_compose: grid mismatch " + A.label +
                                " o " + B.label);
  return {A.label + "*" + B.label, B.in, A.out,
          [A, B](const SpectralField& f) { return A.apply(B.apply(f)); },
          [A, B](const SpectralField& f) { return B.adjoint(A.adjoint(f)); }};
}

LinOp op_sub(const LinOp& A, const LinOp& B) {
  if (!(A.in == B.in) || !(A.out == B.out))
    throw std::invalid_argument("op_sub: grid mismatch");
  return {"(" + A.label + "-" + B.label + ")", A.in, A.out,
          [A, B](const SpectralField& f) { return A.apply(f) - B.apply(f); },
          [A, B](const SpectralField& f) {
            return A.adjoint(f) - B.adjoint(f);
          }};
}

LinOp op_commutator(const LinOp& A, const LinOp& B) {
  return op_sub(op_compose(A, B), op_compose(B, A));
}

LinOp op_periodized_multiplier(const TorusGrid& line_grid,
                               const TorusGrid& torus_grid,
                               const Multiplier& m) {
  auto ap = [line_grid, torus_grid, m](const SpectralField& f) {
    SpectralField t = apply_multiplier(push_forward(f, torus_grid), m);
    // full periodic extension back to the line
    CVec g = to_samples(t);
    CVec s(line_grid.points);
    for (int j = 0; j < line_grid.points; ++j)
      s[j] = g[j % torus_grid.points];
    return field_from_samples(line_grid, s);
  };
  return {"p^*" + m.label + "p_*", line_grid, line_grid, ap, ap};
}

LinOp op_sandwich(const RVec& mask_nodes, const LinOp& A) {
  LinOp chi = op_mask(A.in, mask_nodes);
  return op_compose(chi, op_compose(A, chi));
}

RVec sample_mask(const TorusGrid& grid,
                 const std::function<double(double)>& fn) {
  RVec m(grid.points);
  for (int j = 0; j < grid.points; ++j) m[j] = fn(grid.node_centered(j));
  return m;
}

NormReport operator_norm_L2(const LinOp& op, int iterations,
                            std::uint64_t seed) {
  if (iterations < 20)
    throw std::invalid_argument("operator_norm_L2: iterations must be >= 20");

  SplitMix64 rng = substream(seed, 0);
  SpectralField v = zero_field(op.in);
  for (int i = 0; i < op.in.points; ++i)
    v.coef[i] = Complex(rng.gaussian(), rng.gaussian());
  v.coef /= std::sqrt(mass(v));

  double best = 0.0;
  bool converged = false;
  int used = 0;
  double window_ref = -1.0;
  for (int k = 0; k < iterations; ++k) {
    SpectralField w = op.apply(v);
    const double sigma = std::sqrt(mass(w));
    best = std::max(best, sigma);
    used = k + 1;
    if (k % 5 == 4) {
      if (window_ref >= 0.0 &&
          std::abs(best - window_ref) <= 1e-9 * std::max(best, 1e-300)) {
        converged = true;
        break;
      }
      window_ref = best;
    }
    SpectralField z = op.adjoint(w);
    const double zn = std::sqrt(mass(z));
    if (zn == 0.0) {  // operator annihilates the iterate: norm estimate 0
      converged = true;
      break;
    }
    z.coef /= zn;
    v = z;
  }

  NormReport rep;
  rep.label = "||" + op.label + "||_{L2->L2}";
  rep.value = best;
  rep.params = {{"iterations", static_cast<double>(used)},
                {"converged", converged ? 1.0 : 0.0},
                {"seed", static_cast<double>(seed)}};
  rep.grid_points = op.in.points;
  if (op.in.points <= 512 && op.out.points <= 512) {
    const double oracle = dense_operator_norm(op);
    rep.params.emplace_back("dense_oracle", oracle);
    rep.quadrature_error_estimate = std::abs(oracle - best);
  }
  return rep;
}

double dense_operator_norm(const LinOp& op) {
  const int n = op.in.points;
  const int m = op.out.points;
  Eigen::MatrixXcd M(m, n);
  for (int i = 0; i < n; ++i) {
    SpectralField e = zero_field(op.in);
    e.coef[i] = 1.0;
    M.col(i) = op.apply(e).coef;
  }
  // scale by sqrt(L) ratios so the matrix acts between unit-mass bases
  const double scale =
      std::sqrt(op.out.length) / std::sqrt(op.in.length);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  return svd.singularValues()(0) * scale;
}

}  // namespace nlslab
