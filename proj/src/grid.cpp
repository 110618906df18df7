#include "nlslab/grid.hpp"

#include <stdexcept>
#include <string>

namespace nlslab {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::VectorXd TorusGrid::frequencies() const {
  Eigen::VectorXd out(points);
  for (int i = 0; i < points; ++i) out[i] = freq(i);
  return out;
}

Eigen::VectorXd TorusGrid::nodes() const {
  Eigen::VectorXd out(points);
  for (int j = 0; j < points; ++j) out[j] = node(j);
  return out;
}

TorusGrid make_grid(double length, int points) {
  if (!(length > 0.0))
    throw std::invalid_argument("make_grid: length must be positive, got " +
                                std::to_string(length));
  if (!is_power_of_two(points) || points < 8)
    throw std::invalid_argument(
        "make_grid: points must be a power of two >= 8, got " +
        std::to_string(points));
  return TorusGrid{length, points};
}

}  // namespace nlslab
