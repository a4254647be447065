#include "msq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "msq/kernels.hpp"

namespace msq {
namespace {

void check_pair(const HyperCube& reference, const HyperCube& estimate) {
  if (!reference.same_shape(estimate)) {
    throw Error(ErrorCode::ShapeMismatch,
                "reference and estimate shapes differ");
  }
}

void check_band(const HyperCube& cube, int band) {
  if (band < 0 || band >= cube.bands()) {
    throw Error(ErrorCode::BandOutOfRange, "band " + std::to_string(band));
  }
}

// Inclusive-prefix integral image with a zero top row and left column.
std::vector<double> integral(const double* plane, int h, int w) {
  std::vector<double> s(static_cast<std::size_t>(h + 1) * (w + 1), 0.0);
  for (int y = 0; y < h; ++y) {
    double row = 0.0;
    for (int x = 0; x < w; ++x) {
      row += plane[static_cast<std::size_t>(y) * w + x];
      s[static_cast<std::size_t>(y + 1) * (w + 1) + (x + 1)] =
          s[static_cast<std::size_t>(y) * (w + 1) + (x + 1)] + row;
    }
  }
  return s;
}

double window_sum(const std::vector<double>& s, int stride, int y, int x,
                  int win) {
  return s[static_cast<std::size_t>(y + win) * stride + (x + win)] -
         s[static_cast<std::size_t>(y) * stride + (x + win)] -
         s[static_cast<std::size_t>(y + win) * stride + x] +
         s[static_cast<std::size_t>(y) * stride + x];
}

}  // namespace

double psnr_band(const HyperCube& reference, const HyperCube& estimate,
                 int band) {
  check_pair(reference, estimate);
  check_band(reference, band);
  const std::size_t n = reference.plane_size();
  const double* ref = reference.band(band);
  const double peak = *std::max_element(ref, ref + n);
  bool all_zero = true;
  for (std::size_t i = 0; i < n && all_zero; ++i) all_zero = ref[i] == 0.0;
  if (all_zero) {
    throw Error(ErrorCode::ZeroPeak,
                "reference band " + std::to_string(band) + " is identically zero");
  }
  const double mse =
      kernels::active().sumsq_diff(ref, estimate.band(band), n) / static_cast<double>(n);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

double ssim_band(const HyperCube& reference, const HyperCube& estimate,
                 int band, const SsimOptions& options) {
  check_pair(reference, estimate);
  check_band(reference, band);
  const int h = reference.height();
  const int w = reference.width();
  const int win = options.window;
  if (h < win || w < win) {
    throw Error(ErrorCode::ImageTooSmall,
                "band smaller than the " + std::to_string(win) + "x" +
                    std::to_string(win) + " SSIM window");
  }
  const std::size_t n = reference.plane_size();
  const double* ref = reference.band(band);
  const double* est = estimate.band(band);

  double peak = *std::max_element(ref, ref + n);
  if (peak <= 0.0) {
    for (std::size_t i = 0; i < n; ++i) peak = std::max(peak, std::abs(ref[i]));
  }
  const double level = std::max(peak, 1e-12);
  const double c1 = (options.k1 * level) * (options.k1 * level);
  const double c2 = (options.k2 * level) * (options.k2 * level);

  std::vector<double> xx(n), yy(n), xy(n);
  const auto& ops = kernels::active();
  ops.mul(ref, ref, xx.data(), n);
  ops.mul(est, est, yy.data(), n);
  ops.mul(ref, est, xy.data(), n);

  const std::vector<double> sx = integral(ref, h, w);
  const std::vector<double> sy = integral(est, h, w);
  const std::vector<double> sxx = integral(xx.data(), h, w);
  const std::vector<double> syy = integral(yy.data(), h, w);
  const std::vector<double> sxy = integral(xy.data(), h, w);

  const int stride = w + 1;
  const double inv_n = 1.0 / (win * win);
  double total = 0.0;
  std::size_t count = 0;
  for (int y = 0; y + win <= h; ++y) {
    for (int x = 0; x + win <= w; ++x) {
      const double mx = window_sum(sx, stride, y, x, win) * inv_n;
      const double my = window_sum(sy, stride, y, x, win) * inv_n;
      const double vx = window_sum(sxx, stride, y, x, win) * inv_n - mx * mx;
      const double vy = window_sum(syy, stride, y, x, win) * inv_n - my * my;
      const double cov = window_sum(sxy, stride, y, x, win) * inv_n - mx * my;
      const double num = (2.0 * mx * my + c1) * (2.0 * cov + c2);
      const double den = (mx * mx + my * my + c1) * (vx + vy + c2);
      total += num / den;
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

MetricsReport psnr_summary(const HyperCube& reference, const HyperCube& estimate,
                           const SsimOptions& ssim) {
  check_pair(reference, estimate);
  MetricsReport report;
  const int bands = reference.bands();
  report.psnr_per_band.resize(bands);
  report.ssim_per_band.resize(bands);
  double sum = 0.0;
  int finite = 0;
  for (int k = 0; k < bands; ++k) {
    const double v = psnr_band(reference, estimate, k);
    report.psnr_per_band[k] = v;
    if (std::isfinite(v)) {
      sum += v;
      ++finite;
    } else {
      report.infinite_bands.push_back(k);
    }
    report.ssim_per_band[k] = ssim_band(reference, estimate, k, ssim);
  }
  double ssim_sum = 0.0;
  for (double v : report.ssim_per_band) ssim_sum += v;
  report.ssim_mean = ssim_sum / bands;

  if (finite == 0) {
    throw Error(ErrorCode::AllInfinite, "every band has zero error");
  }
  const double mean = sum / finite;
  double sq = 0.0;
  for (double v : report.psnr_per_band) {
    if (std::isfinite(v)) sq += (v - mean) * (v - mean);
  }
  report.psnr_mean = mean;
  report.psnr_std = std::sqrt(sq / finite);
  report.psnr_std_sample = finite > 1 ? std::sqrt(sq / (finite - 1)) : 0.0;
  return report;
}

std::vector<double> mse_map(const HyperCube& reference,
                            const HyperCube& estimate) {
  check_pair(reference, estimate);
  const std::size_t n = reference.plane_size();
  const int bands = reference.bands();
  std::vector<double> acc(n, 0.0);
  for (int k = 0; k < bands; ++k) {
    const double* ref = reference.band(k);
    const double* est = estimate.band(k);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = ref[i] - est[i];
      acc[i] += d * d;
    }
  }
  const double inv_b = 1.0 / bands;
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = std::log10(std::max(1e-20, acc[i] * inv_b));
  }
  return acc;
}

}  // namespace msq
