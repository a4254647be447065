// Reconstruction quality: per-band PSNR, aggregate statistics, SSIM and
// per-pixel log-MSE maps.
#pragma once

#include <vector>

#include "msq/types.hpp"

namespace msq {

struct SsimOptions {
  int window = 8;        // uniform sliding window side, stride 1
  double k1 = 0.01;      // C1 = (k1 * L)^2
  double k2 = 0.03;      // C2 = (k2 * L)^2
};

// PSNR of one band in dB; the peak is the per-band maximum of the reference.
// Returns +inf when the bands are identical. Throws ZeroPeak for an
// identically-zero reference band.
double psnr_band(const HyperCube& reference, const HyperCube& estimate,
                 int band);

// Per-band PSNR plus mean and population std over the finite bands; also
// fills the SSIM fields. Throws AllInfinite when every band is identical.
MetricsReport psnr_summary(const HyperCube& reference, const HyperCube& estimate,
                           const SsimOptions& ssim = {});

// Mean local SSIM over sliding windows, in [-1, 1]; exactly 1.0 for
// identical bands. Throws ImageTooSmall when the band is smaller than the
// window.
double ssim_band(const HyperCube& reference, const HyperCube& estimate,
                 int band, const SsimOptions& options = {});

// map(p) = log10(max(1e-20, mean_k (ref - est)^2)).
std::vector<double> mse_map(const HyperCube& reference,
                            const HyperCube& estimate);

}  // namespace msq
