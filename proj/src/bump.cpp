#include "nlslab/bump.hpp"

#include <cmath>

namespace nlslab {

double smoothstep(double r) {
  if (r <= 0.0) return 0.0;
  if (r >= 1.0) return 1.0;
  return ((6.0 * r - 15.0) * r + 10.0) * r * r * r;
}

double smoothstep_integral(double y) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 0.5;
  return ((y - 3.0) * y + 2.5) * y * y * y * y;
}

namespace {

// Ramp profile H on [0,1]: integral of a trapezoidal derivative that rises
// via smoothstep over [0,2d], is flat on [2d,1-2d], and falls symmetrically.
// H(0)=0, H(1)=1, H(1-s) = 1-H(s), H' <= 1/(1-2d).
double ramp(double s) {
  constexpr double d = kBumpCorner;
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  if (s > 0.5) return 1.0 - ramp(1.0 - s);
  double acc;
  if (s <= 2.0 * d) {
    acc = 2.0 * d * smoothstep_integral(s / (2.0 * d));
  } else {
    acc = d + (s - 2.0 * d);
  }
  return acc / (1.0 - 2.0 * d);
}

}  // namespace

double bump(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  return 1.0 - ramp(a - 1.0);
}

}  // namespace nlslab
