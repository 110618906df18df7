#pragma once

#include <Eigen/Dense>
#include <complex>

namespace nlslab {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Unscaled DFT:  out_k = sum_j in_j e^{-2 pi i jk/n}.
CVec dft(const CVec& in);
// Unscaled inverse DFT: out_j = sum_k in_k e^{+2 pi i jk/n}.
CVec idft(const CVec& in);

}  // namespace nlslab
