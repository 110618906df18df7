#pragma once

#include "nlslab/field.hpp"

namespace nlslab {

// Node-wise multiplication by a real mask.
SpectralField apply_mask(const SpectralField& f, const RVec& mask_nodes);

// Periodization [p_* f](x + L Z) = sum_{y ~ x} f(y).  The line grid must be
// an integer multiple of the torus grid with equal node spacing.
SpectralField push_forward(const SpectralField& line_field,
                           const TorusGrid& torus_grid);

// Periodic-extension sampling [p^* g](x) = g(x + L Z), kept on the window
// of wrapped half-width window_len/2 around window_center and zero outside.
// window_len must not exceed the torus circumference.
SpectralField pull_back(const SpectralField& torus_field,
                        const TorusGrid& line_grid, double window_center,
                        double window_len);

}  // namespace nlslab
