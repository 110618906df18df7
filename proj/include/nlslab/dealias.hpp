#pragma once

#include "nlslab/field.hpp"

namespace nlslab {

// Node samples of a field on the 3x zero-padded grid (3n points, same L).
// A padding factor of 3 makes u^3 conj(u)^2 products exactly alias-free on
// the retained band, and the rectangle rule for int w |u|^6 exact for
// band-limited w.
CVec padded_samples(const SpectralField& f);

// Spectral truncation of padded samples back to the original band.
SpectralField field_from_padded_samples(const TorusGrid& grid,
                                        const CVec& padded);

// Dealiased |u|^4 u.
SpectralField quintic_term(const SpectralField& f);

// Dealiased w(x) |u|^4 u with w sampled on the padded grid.
SpectralField weighted_quintic_term(const SpectralField& f,
                                    const RVec& weight_padded);

// (1/6) int w(x) |u|^6 dx on the padded grid (w == 1 when weight empty).
double sextic_integral(const SpectralField& f, const RVec& weight_padded);

inline int padded_points(const TorusGrid& grid) { return 3 * grid.points; }

}  // namespace nlslab
