#pragma once

namespace nlslab {

// Quintic smoothstep rising 0 -> 1 on [0,1]; C^2 at both ends.
double smoothstep(double r);

// The fixed frequency bump: 1 on |xi| <= 1, 0 on |xi| >= 2, monotone C^2
// ramp in between.  The ramp is a unit-slope descent whose corners are
// rounded inward by the smoothstep over half-width kBumpCorner, so the
// kernel of any bump-built multiplier has an honest |z|^-2 tail out to
// |z| ~ 1/(2 pi kBumpCorner) before the smooth-corner decay takes over.
inline constexpr double kBumpCorner = 1.0 / 32.0;

double bump(double xi);

// Integral of the smoothstep: int_0^y smoothstep = y^6 - 3 y^5 + 2.5 y^4.
double smoothstep_integral(double y);

}  // namespace nlslab
