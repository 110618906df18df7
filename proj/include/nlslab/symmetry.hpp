#pragma once

#include <functional>

#include "nlslab/field.hpp"

namespace nlslab {

// A group element (scale, boost, translation, time shift) plus the U(1)
// phase that makes exact group inverses representable.  On grids the scale
// must be a power of two; boost and translation are rounded to the lattice
// with the residuals exposed.
struct SymmetryFrame {
  double scale = 1.0;        // power of two on grids
  double boost = 0.0;        // cycles per unit length
  double translation = 0.0;  // torus coordinate
  double time_shift = 0.0;
  double phase = 0.0;        // global e^{2 pi i phase} factor

  // Exact group inverse (includes the phase).
  SymmetryFrame inverse() const;
};

// Rounding residuals of a frame on a grid; both below one lattice spacing.
struct FrameResiduals {
  double boost_residual = 0.0;
  double translation_residual = 0.0;
};

FrameResiduals frame_residuals(const SymmetryFrame& frame,
                               const TorusGrid& grid);

// g f = scale^{-1/2} e^{2 pi i x boost} f(scale^{-1}(x - translation)),
// times the frame phase.  Scaling by 2^m maps the (L, n) grid to
// (2^m L, 2^m n); downscaling requires the dropped band to be empty.
SpectralField apply_g(const SymmetryFrame& frame, const SpectralField& f);

// G f = g (e^{i t0 d_xx} f).
SpectralField apply_G(const SymmetryFrame& frame, const SpectralField& f);

using TrajectorySampler = std::function<SpectralField(double)>;

// The trajectory operator: (T u)(t) picks the sampler at
// time_shift + t/scale^2 and applies the moving frame
// scale^{-1/2} e^{2 pi i x boost} e^{-4 pi^2 i t boost^2}
//   u(..., scale^{-1}(x - translation - 4 pi boost t)).
// The time-dependent translation is applied as an exact spectral phase.
TrajectorySampler apply_T(const SymmetryFrame& frame,
                          const TrajectorySampler& sampler);

// The five-term orthogonality sum, symmetrized over the argument order
// (mean of both orientations; see notes).  Always >= 2.
double orthogonality_defect(const SymmetryFrame& a, const SymmetryFrame& b);

}  // namespace nlslab
