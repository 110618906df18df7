#pragma once

#include <Eigen/Dense>

namespace nlslab {

// Discretized circle R/(L Z) with a power-of-two number of collocation
// nodes.  Lattice frequencies are xi_k = k/L (cycles per unit length) for
// k in {-points/2, ..., points/2 - 1}; coefficients are stored in FFT
// order (k = 0..points/2-1 then -points/2..-1).
struct TorusGrid {
  double length = 0.0;
  int points = 0;

  double spacing() const { return length / points; }
  double freq_spacing() const { return 1.0 / length; }
  double nyquist() const { return points / (2.0 * length); }

  // Signed integer mode of storage index i.
  int mode(int i) const { return i < points / 2 ? i : i - points; }
  // Storage index of signed mode k in [-points/2, points/2).
  int index_of_mode(int k) const { return k >= 0 ? k : k + points; }
  double freq(int i) const { return mode(i) / length; }
  // Node coordinate in [0, L).
  double node(int j) const { return j * spacing(); }
  // Node coordinate folded to [-L/2, L/2).
  double node_centered(int j) const {
    double x = node(j);
    return x >= length / 2 ? x - length : x;
  }

  Eigen::VectorXd frequencies() const;
  Eigen::VectorXd nodes() const;

  friend bool operator==(const TorusGrid&, const TorusGrid&) = default;
};

// Validates length > 0 and points a power of two >= 8; throws
// std::invalid_argument otherwise.
TorusGrid make_grid(double length, int points);

bool is_power_of_two(int n);

}  // namespace nlslab
