#pragma once

#include <cstdint>

#include "nlslab/norms.hpp"

namespace nlslab {

struct BilinearSetup {
  double L = 128.0;   // torus circumference (large enough that nothing wraps)
  int points = 8192;  // collocation nodes
  int time_samples = 48;
  double packet_width_factor = 4.0;  // spatial window = factor / shell freq
};

// Lemma-2.3 probe: over trial_count random unit-mass wave packets
// frequency-localized in the dyadic shells (M, 2M] and (N, 2N], evolves
// both linearly on [0, T] and returns the max over trials of
//   || u_M v_N ||_{L^3_{t,x}} / ((M/N)^{1/4} ||u_0|| ||v_0||).
// Requires N >= 10 M and both shells resolvable on the grid.
NormReport bilinear_check(double M, double N, int trial_count,
                          std::uint64_t seed, double T,
                          const BilinearSetup& setup = {});

}  // namespace nlslab
