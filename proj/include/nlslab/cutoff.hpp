#pragma once

#include <array>

#include "nlslab/field.hpp"

namespace nlslab {

// The five nested cutoff masks chi^0 <= ... <= chi^4 on a line grid,
// built around a low-mass point of the periodized initial data.  Layout in
// units of G = D K T / eta, measured from the cut point c: level j is
// identically 1 up to distance-from-window-center L/2 - (20-4j) G and
// ramps to 0 over width 2G, so measured slopes stay <= eta/(DKT) and
// support gaps between consecutive levels are >= 2G >= DKT/eta.
struct CutoffSet {
  TorusGrid line_grid;
  std::array<RVec, 5> masks;

  double D = 0, K = 0, T = 0, eta = 0, L = 0;
  double gap_unit = 0;            // G = DKT/eta
  double center_torus = 0;        // cut point c on the torus, in [L/4, L/2]
  double window_center_line = 0;  // line coordinate of the window center

  // Measured report
  std::array<double, 5> max_slope{};
  double slope_bound = 0;  // eta/(DKT)
  double min_support_gap = 0;
  double gap_bound = 0;  // DKT/eta
  std::array<double, 5> residual_mass{};  // ||(1-chi^j) u0|| on the line
  double scanned_zone_mass = 0;           // best arc mass found by the scan
};

// Builds the cutoff set for torus data u0 (residual target eta, the
// paper's eta_n = eps_n identification).  Throws std::runtime_error with a
// diagnostic when no low-mass window exists or the layout does not fit.
CutoffSet build_cutoffs(double D, double K, double T, double eta,
                        const SpectralField& u0_torus,
                        const TorusGrid& line_grid);

// Cyclic node shift: out[j] = in[(j + shift) mod n].
SpectralField rotate_nodes(const SpectralField& f, long shift);

// Unrolls one torus period onto the line so the cut point lands at the
// window edges +-L/2 (window centered at line coordinate 0), and its
// adjoint periodization back onto the torus.
SpectralField place_window(const SpectralField& torus_field,
                           const TorusGrid& line_grid, double cut_point);
SpectralField fold_window(const SpectralField& line_field,
                          const TorusGrid& torus_grid, double cut_point);

}  // namespace nlslab
