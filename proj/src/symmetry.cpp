#include "nlslab/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

// Integer log2 of the scale; throws unless scale is a power of two giving
// a representable output grid.
int scale_exponent(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("symmetry: scale must be positive");
  const double l = std::log2(scale);
  const double r = std::round(l);
  if (std::abs(l - r) > 1e-12)
    throw std::invalid_argument("symmetry: scale must be a power of two");
  return static_cast<int>(r);
}

struct EffectiveFrame {
  TorusGrid out;      // grid after dilation
  double scale;       // 2^m
  long boost_modes;   // b: boost rounded to b/(out.length)
  long shift_nodes;   // s: translation rounded to s * out.spacing()
  double boost_eff;   // b / out.length
  double shift_eff;   // s * out.spacing()
};

EffectiveFrame effective(const SymmetryFrame& frame, const TorusGrid& grid) {
  const int m = scale_exponent(frame.scale);
  long pts = grid.points;
  if (m >= 0) {
    pts <<= m;
  } else {
    if (grid.points >> (-m) < 8)
      throw std::invalid_argument("symmetry: scale incompatible with grid");
    pts >>= (-m);
  }
  EffectiveFrame e;
  e.scale = frame.scale;
  e.out = TorusGrid{grid.length * frame.scale, static_cast<int>(pts)};
  e.boost_modes = std::lround(frame.boost * e.out.length);
  e.boost_eff = e.boost_modes / e.out.length;
  e.shift_nodes = std::lround(frame.translation / e.out.spacing());
  e.shift_eff = e.shift_nodes * e.out.spacing();
  return e;
}

// Dilation: same signed mode index, coefficient scaled by scale^{-1/2}.
// Downscaling requires the dropped band to be (numerically) empty.
CVec dilate_coef(const SpectralField& f, const TorusGrid& out, double scale) {
  const int n = f.grid.points;
  const int np = out.points;
  CVec c = CVec::Zero(np);
  const double amp = 1.0 / std::sqrt(scale);
  double dropped = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = f.grid.mode(i);
    if (k >= -np / 2 && k < np / 2) {
      c[k >= 0 ? k : k + np] = amp * f.coef[i];
    } else {
      dropped += std::norm(f.coef[i]);
    }
  }
  const double total = f.coef.squaredNorm();
  if (dropped > 1e-24 * std::max(total, 1e-300))
    throw std::invalid_argument(
        "symmetry: scale incompatible with grid (band-limited data required "
        "for downscaling)");
  return c;
}

// Applies (translation phase, boost shift, global phase) on the out grid.
// translation may be any real; it is applied as an exact spectral phase.
CVec frame_phase_boost(const TorusGrid& out, const CVec& in, double shift,
                       long boost_modes, double phase_cycles) {
  const int n = out.points;
  CVec outc(n);
  const Complex global = std::polar(1.0, 2.0 * M_PI * phase_cycles);
  for (int i = 0; i < n; ++i) {
    const int k = out.mode(i);
    const Complex v =
        in[i] * global * std::polar(1.0, -2.0 * M_PI * k * shift / out.length);
    long kp = k + boost_modes;
    kp = ((kp % n) + n) % n;  // circular spectral shift (exact on samples)
    outc[static_cast<int>(kp)] = v;
  }
  return outc;
}

}  // namespace

FrameResiduals frame_residuals(const SymmetryFrame& frame,
                               const TorusGrid& grid) {
  const EffectiveFrame e = effective(frame, grid);
  return {frame.boost - e.boost_eff, frame.translation - e.shift_eff};
}

SymmetryFrame SymmetryFrame::inverse() const {
  SymmetryFrame inv;
  inv.scale = 1.0 / scale;
  inv.boost = -scale * boost;
  inv.translation =
      -translation / scale + 4.0 * M_PI * scale * boost * time_shift;
  inv.time_shift = -time_shift * scale * scale;
  inv.phase = -phase - translation * boost +
              2.0 * M_PI * time_shift * scale * scale * boost * boost;
  return inv;
}

SpectralField apply_g(const SymmetryFrame& frame, const SpectralField& f) {
  const EffectiveFrame e = effective(frame, f.grid);
  CVec c = dilate_coef(f, e.out, e.scale);
  c = frame_phase_boost(e.out, c, e.shift_eff, e.boost_modes, frame.phase);
  return {e.out, c};
}

SpectralField apply_G(const SymmetryFrame& frame, const SpectralField& f) {
  SpectralField shifted = f;
  if (frame.time_shift != 0.0) {
    const double c = -4.0 * M_PI * M_PI * frame.time_shift;
    for (int i = 0; i < f.grid.points; ++i) {
      const double xi = f.grid.freq(i);
      shifted.coef[i] *= std::polar(1.0, c * xi * xi);
    }
  }
  return apply_g(frame, shifted);
}

TrajectorySampler apply_T(const SymmetryFrame& frame,
                          const TrajectorySampler& sampler) {
  const SymmetryFrame fr = frame;
  return [fr, sampler](double t) {
    SpectralField inner = sampler(fr.time_shift + t / (fr.scale * fr.scale));
    const EffectiveFrame e = effective(fr, inner.grid);
    const double xi0 = e.boost_eff;
    const double moving_shift = e.shift_eff + 4.0 * M_PI * xi0 * t;
    const double phase_cycles = fr.phase - 2.0 * M_PI * t * xi0 * xi0;
    CVec c = dilate_coef(inner, e.out, e.scale);
    c = frame_phase_boost(e.out, c, moving_shift, e.boost_modes, phase_cycles);
    return SpectralField{e.out, c};
  };
}

double orthogonality_defect(const SymmetryFrame& a, const SymmetryFrame& b) {
  const auto oriented = [](const SymmetryFrame& j, const SymmetryFrame& k) {
    const double lj = j.scale, lk = k.scale;
    const double dxi = j.boost - k.boost;
    const double pos =
        j.translation - k.translation -
        2.0 * j.time_shift * lj * lj * dxi;
    return lk / lj + lj / lk + lj * lk * dxi * dxi +
           std::abs(lj * lj * j.time_shift - lk * lk * k.time_shift) /
               (lj * lk) +
           pos * pos / (lj * lk);
  };
  return 0.5 * (oriented(a, b) + oriented(b, a));
}

}  // namespace nlslab
