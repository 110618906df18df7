#pragma once

#include <cstdint>

#include "nlslab/multiplier.hpp"
#include "nlslab/norms.hpp"

namespace nlslab {

// A bounded linear operator between (possibly different) grids with an
// explicit adjoint, composable from multiplier / mask / transfer pieces.
struct LinOp {
  std::string label;
  TorusGrid in, out;
  std::function<SpectralField(const SpectralField&)> apply;
  std::function<SpectralField(const SpectralField&)> adjoint;
};

LinOp op_identity(const TorusGrid& grid);
LinOp op_multiplier(const TorusGrid& grid, const Multiplier& m);
// Node-wise real mask (self-adjoint).
LinOp op_mask(const TorusGrid& grid, const RVec& mask_nodes);
// A then B? No: compose(A, B) = A o B (apply B first).
LinOp op_compose(const LinOp& A, const LinOp& B);
LinOp op_sub(const LinOp& A, const LinOp& B);
LinOp op_commutator(const LinOp& A, const LinOp& B);
// p^* M p_* : the torus multiplier conjugated by periodization onto the
// line grid (self-adjoint for a real symbol).
LinOp op_periodized_multiplier(const TorusGrid& line_grid,
                               const TorusGrid& torus_grid,
                               const Multiplier& m);
// mask o A o mask.
LinOp op_sandwich(const RVec& mask_nodes, const LinOp& A);

RVec sample_mask(const TorusGrid& grid,
                 const std::function<double(double)>& fn_of_centered_x);

// Power iteration on A*A from a seeded random start.  The estimate is the
// running max of ||A v_k|| over unit vectors, a monotone nondecreasing
// lower-bound sequence; params record convergence (relative change of the
// last window below 1e-9) and, on grids <= 512 modes, the dense
// singular-value oracle computed alongside.
NormReport operator_norm_L2(const LinOp& op, int iterations,
                            std::uint64_t seed);

// Largest singular value via a dense matrix build + SVD; cost is cubic,
// intended for grids <= 512 modes.
double dense_operator_norm(const LinOp& op);

}  // namespace nlslab
