#include "msq/mosaic.hpp"

#include <algorithm>
#include <cmath>

#include "msq/kernels.hpp"

namespace msq {

MosaicFrame apply_mosaic(const HyperCube& cube, const MosaicPattern& pattern) {
  if (cube.bands() != pattern.cells()) {
    throw Error(ErrorCode::BandCountMismatch,
                "cube has " + std::to_string(cube.bands()) +
                    " bands, pattern expects " + std::to_string(pattern.cells()));
  }
  const int h = cube.height();
  const int w = cube.width();
  std::vector<double> raw(static_cast<std::size_t>(h) * w);
  for (int y = 0; y < h; ++y) {
    const int cr = y % pattern.cell_rows();
    for (int x = 0; x < w; ++x) {
      raw[static_cast<std::size_t>(y) * w + x] =
          cube.at(y, x, pattern.band_of(cr, x % pattern.cell_cols()));
    }
  }
  return MosaicFrame(h, w, pattern, std::move(raw));
}

HyperCube embed(const MosaicFrame& frame, int bands) {
  const MosaicPattern& pattern = frame.pattern();
  const int max_band =
      *std::max_element(pattern.table().begin(), pattern.table().end());
  if (bands < max_band + 1) {
    throw Error(ErrorCode::BandCountMismatch,
                "pattern references band " + std::to_string(max_band) +
                    " but cube has " + std::to_string(bands) + " bands");
  }
  HyperCube cube(frame.height(), frame.width(), bands, 0.0);
  for (int y = 0; y < frame.height(); ++y) {
    const int cr = y % pattern.cell_rows();
    for (int x = 0; x < frame.width(); ++x) {
      cube.at(y, x, pattern.band_of(cr, x % pattern.cell_cols())) = frame.at(y, x);
    }
  }
  return cube;
}

SampleResidual sample_residual(const HyperCube& cube, const MosaicFrame& frame) {
  if (cube.height() != frame.height() || cube.width() != frame.width() ||
      cube.bands() != frame.pattern().cells()) {
    throw Error(ErrorCode::ShapeMismatch,
                "cube and frame dimensions do not agree");
  }
  MosaicFrame sampled = apply_mosaic(cube, frame.pattern());
  const auto& ops = kernels::active();
  std::vector<double> diff(sampled.size());
  ops.sub(sampled.raw().data(), frame.raw().data(), diff.data(), diff.size());
  const double res_norm = std::sqrt(ops.sumsq(diff.data(), diff.size()));
  const double y_norm = std::sqrt(ops.sumsq(frame.raw().data(), frame.size()));
  double rel = 0.0;
  if (y_norm > 0.0) {
    rel = res_norm / y_norm;
  } else if (res_norm > 0.0) {
    throw Error(ErrorCode::ZeroMeasurement,
                "zero measurement frame with nonzero residual");
  }
  return {MosaicFrame(frame.height(), frame.width(), frame.pattern(),
                      std::move(diff)),
          rel};
}

}  // namespace msq
