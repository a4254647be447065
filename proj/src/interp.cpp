#include "msq/interp.hpp"

#include <string>

#include "msq/kernels.hpp"

namespace msq {
namespace {

// Separable 2D convolution with the outer-product kernel, zero extension.
std::vector<double> conv2_wb(const std::vector<double>& in, int h, int w) {
  const auto& ops = kernels::active();
  std::vector<double> tmp(in.size());
  std::vector<double> out(in.size());
  ops.conv7_rows(in.data(), tmp.data(), h, w, kWbTaps.data());
  ops.conv7_cols(tmp.data(), out.data(), h, w, kWbTaps.data());
  return out;
}

std::vector<double> mask_weights(const std::vector<std::uint8_t>& mask, int h,
                                 int w) {
  std::vector<double> m(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) m[i] = mask[i] ? 1.0 : 0.0;
  return conv2_wb(m, h, w);
}

void check_reachable(const std::vector<double>& den, int w) {
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (den[i] == 0.0) {
      const int y = static_cast<int>(i) / w;
      const int x = static_cast<int>(i) % w;
      throw Error(ErrorCode::EmptyMask,
                  "no measured pixel within kernel reach of (y=" +
                      std::to_string(y) + ", x=" + std::to_string(x) + ")");
    }
  }
}

std::vector<double> interpolate_with_weights(const std::vector<double>& sparse,
                                             const std::vector<double>& den,
                                             int h, int w, BorderMode border) {
  std::vector<double> num = conv2_wb(sparse, h, w);
  if (border == BorderMode::PaperZeroPad) return num;
  std::vector<double> out(num.size());
  kernels::active().div(num.data(), den.data(), out.data(), num.size());
  return out;
}

}  // namespace

std::vector<double> wb_interpolate_band(const std::vector<double>& sparse,
                                        const std::vector<std::uint8_t>& mask,
                                        int height, int width,
                                        BorderMode border) {
  if (sparse.size() != static_cast<std::size_t>(height) * width ||
      mask.size() != sparse.size()) {
    throw Error(ErrorCode::ShapeMismatch, "band and mask sizes disagree");
  }
  std::vector<double> den = mask_weights(mask, height, width);
  check_reachable(den, width);
  return interpolate_with_weights(sparse, den, height, width, border);
}

HyperCube wb_demosaic(const MosaicFrame& frame, BorderMode border) {
  const int bands = frame.pattern().cells();
  const int h = frame.height();
  const int w = frame.width();
  HyperCube embedded = embed(frame, bands);
  HyperCube out(h, w, bands);
  for (int k = 0; k < bands; ++k) {
    std::vector<double> band(embedded.band(k), embedded.band(k) + embedded.plane_size());
    std::vector<double> plane =
        wb_interpolate_band(band, mask_of(frame.pattern(), k, h, w), h, w, border);
    std::copy(plane.begin(), plane.end(), out.band(k));
  }
  return out;
}

HyperCube sd_demosaic(const MosaicFrame& frame, BorderMode border) {
  const MosaicPattern& pattern = frame.pattern();
  const int bands = pattern.cells();
  const int h = frame.height();
  const int w = frame.width();
  const std::size_t plane = static_cast<std::size_t>(h) * w;

  HyperCube wb = wb_demosaic(frame, border);

  std::vector<std::vector<std::uint8_t>> masks(bands);
  std::vector<std::vector<double>> weights(bands);
  for (int k = 0; k < bands; ++k) {
    masks[k] = mask_of(pattern, k, h, w);
    weights[k] = mask_weights(masks[k], h, w);
    check_reachable(weights[k], w);
  }

  const std::vector<double>& raw = frame.raw();
  HyperCube out(h, w, bands);
  std::vector<double> delta(plane);
  for (int k = 0; k < bands; ++k) {
    double* out_k = out.band(k);
    for (std::size_t i = 0; i < plane; ++i) {
      if (masks[k][i]) out_k[i] = raw[i];
    }
    for (int l = 0; l < bands; ++l) {
      if (l == k) continue;
      // Difference between band-k measurements and the WB estimate of band l,
      // supported on band k's comb.
      std::fill(delta.begin(), delta.end(), 0.0);
      const double* wb_l = wb.band(l);
      for (std::size_t i = 0; i < plane; ++i) {
        if (masks[k][i]) delta[i] = raw[i] - wb_l[i];
      }
      std::vector<double> interp =
          interpolate_with_weights(delta, weights[k], h, w, border);
      for (std::size_t i = 0; i < plane; ++i) {
        if (masks[l][i]) out_k[i] = raw[i] + interp[i];
      }
    }
  }
  return out;
}

HyperCube id_demosaic(const MosaicFrame& frame, BorderMode border) {
  const MosaicPattern& pattern = frame.pattern();
  const int bands = pattern.cells();
  const int h = frame.height();
  const int w = frame.width();
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  const std::vector<double>& raw = frame.raw();

  // Smoothed intensity map: every band contributes weight 1/cells at every
  // pixel thanks to the unit stride-4 residue sums of the kernel.
  std::vector<double> intensity_conv = conv2_wb(raw, h, w);
  std::vector<double> ibar(plane);
  if (border == BorderMode::PaperZeroPad) {
    const double inv = 1.0 / pattern.cells();
    for (std::size_t i = 0; i < plane; ++i) ibar[i] = intensity_conv[i] * inv;
  } else {
    std::vector<double> ones(plane, 1.0);
    std::vector<double> den = conv2_wb(ones, h, w);
    kernels::active().div(intensity_conv.data(), den.data(), ibar.data(), plane);
  }

  HyperCube out(h, w, bands);
  std::vector<double> delta(plane);
  for (int k = 0; k < bands; ++k) {
    std::vector<std::uint8_t> mask = mask_of(pattern, k, h, w);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (std::size_t i = 0; i < plane; ++i) {
      if (mask[i]) delta[i] = raw[i] - ibar[i];
    }
    std::vector<double> interp = wb_interpolate_band(delta, mask, h, w, border);
    double* out_k = out.band(k);
    for (std::size_t i = 0; i < plane; ++i) out_k[i] = ibar[i] + interp[i];
  }
  return out;
}

HyperCube demosaic_init(const MosaicFrame& frame, InitMethod init,
                        BorderMode border) {
  switch (init) {
    case InitMethod::Zero:
      return HyperCube(frame.height(), frame.width(), frame.pattern().cells());
    case InitMethod::WB:
      return wb_demosaic(frame, border);
    case InitMethod::SD:
      return sd_demosaic(frame, border);
    case InitMethod::ID:
      return id_demosaic(frame, border);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown init method");
}

}  // namespace msq
