#pragma once

#include "nlslab/model.hpp"
#include "nlslab/norms.hpp"

namespace nlslab {

// sup_{|x| <= R} |(-d_xx + 1)^{-1} (h(n x) - hbar)| via the Helmholtz
// multiplier; h(n .) is 1/n-periodic so the unit torus evaluates the
// resolvent exactly.  The derivative variant applies d_x first.
NormReport homogenization_defect(const CoefficientSpec& h, int n, double R,
                                 bool derivative = false);

}  // namespace nlslab
