#include "nlslab/fft.hpp"

#include <unsupported/Eigen/FFT>

namespace nlslab {

namespace {
// One transform object (and plan cache) per thread; Eigen's FFT caches
// twiddle tables per size inside the object.
Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}
}  // namespace

CVec dft(const CVec& in) {
  CVec out(in.size());
  engine().fwd(out, in);
  return out;
}

CVec idft(const CVec& in) {
  CVec out(in.size());
  engine().inv(out, in);
  out *= static_cast<double>(in.size());
  return out;
}

}  // namespace nlslab
