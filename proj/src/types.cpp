#include "msq/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace msq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::BandOutOfRange: return "BandOutOfRange";
    case ErrorCode::BandCountMismatch: return "BandCountMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroMeasurement: return "ZeroMeasurement";
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::ImageTooSmall: return "ImageTooSmall";
    case ErrorCode::InvalidInit: return "InvalidInit";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::SparsityOutOfRange: return "SparsityOutOfRange";
    case ErrorCode::ZeroPeak: return "ZeroPeak";
    case ErrorCode::AllInfinite: return "AllInfinite";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::UnsupportedDataType: return "UnsupportedDataType";
    case ErrorCode::UnsupportedInterleave: return "UnsupportedInterleave";
    case ErrorCode::HeaderParseError: return "HeaderParseError";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

bool Error::is_data_error() const noexcept {
  switch (code_) {
    case ErrorCode::NonFinite:
    case ErrorCode::ZeroPeak:
    case ErrorCode::AllInfinite:
      return false;
    default:
      return true;
  }
}

HyperCube::HyperCube(int height, int width, int bands, double fill)
    : height_(height), width_(width), bands_(bands) {
  if (height < 1 || width < 1 || bands < 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "cube dimensions must be >= 1, got " + std::to_string(height) +
                    "x" + std::to_string(width) + "x" + std::to_string(bands));
  }
  values_.assign(size(), fill);
}

HyperCube HyperCube::from_values(int height, int width, int bands,
                                 std::vector<double> values) {
  HyperCube cube(height, width, bands);
  if (values.size() != cube.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "value count " + std::to_string(values.size()) +
                    " does not match declared " + std::to_string(cube.size()));
  }
  cube.values_ = std::move(values);
  return cube;
}

void validate_cube(const HyperCube& cube) {
  if (cube.height() < 1 || cube.width() < 1 || cube.bands() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "empty cube");
  }
  if (cube.values().size() != cube.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "value count " + std::to_string(cube.values().size()) +
                    " does not match declared " + std::to_string(cube.size()));
  }
  const std::vector<double>& v = cube.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      const std::size_t plane = cube.plane_size();
      const int band = static_cast<int>(i / plane);
      const std::size_t in_plane = i % plane;
      const int y = static_cast<int>(in_plane / cube.width());
      const int x = static_cast<int>(in_plane % cube.width());
      std::ostringstream msg;
      msg << "non-finite value at (y=" << y << ", x=" << x << ", band=" << band
          << ")";
      throw Error(ErrorCode::NonFiniteValue, msg.str());
    }
  }
}

MosaicPattern::MosaicPattern(int cell_rows, int cell_cols,
                             std::vector<int> band_of)
    : cell_rows_(cell_rows), cell_cols_(cell_cols), band_of_(std::move(band_of)) {
  if (cell_rows < 1 || cell_cols < 1) {
    throw Error(ErrorCode::InvalidArgument, "pattern cell size must be >= 1");
  }
  if (band_of_.size() != static_cast<std::size_t>(cells())) {
    throw Error(ErrorCode::DimensionMismatch,
                "pattern table size does not match cell count");
  }
  for (int b : band_of_) {
    if (b < 0) {
      throw Error(ErrorCode::BandOutOfRange, "negative band index in pattern");
    }
  }
}

bool MosaicPattern::is_bijective() const noexcept {
  std::vector<bool> seen(cells(), false);
  for (int b : band_of_) {
    if (b >= cells() || seen[b]) return false;
    seen[b] = true;
  }
  return true;
}

MosaicPattern imec_4x4_pattern() {
  std::vector<int> table(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) table[r * 4 + c] = 4 * r + c;
  return MosaicPattern(4, 4, std::move(table));
}

std::vector<std::uint8_t> mask_of(const MosaicPattern& pattern, int band,
                                  int height, int width) {
  if (band < 0 || band >= pattern.cells()) {
    throw Error(ErrorCode::BandOutOfRange,
                "band " + std::to_string(band) + " not in pattern with " +
                    std::to_string(pattern.cells()) + " cells");
  }
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(height) * width, 0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (pattern.band_at(y, x) == band) {
        mask[static_cast<std::size_t>(y) * width + x] = 1;
      }
    }
  }
  return mask;
}

MosaicFrame::MosaicFrame(int height, int width, MosaicPattern pattern,
                         std::vector<double> raw)
    : height_(height), width_(width), pattern_(std::move(pattern)),
      raw_(std::move(raw)) {
  if (height < 1 || width < 1) {
    throw Error(ErrorCode::DimensionMismatch, "frame dimensions must be >= 1");
  }
  if (raw_.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "frame payload size does not match dimensions");
  }
}

const char* init_method_name(InitMethod m) {
  switch (m) {
    case InitMethod::Zero: return "zero";
    case InitMethod::WB: return "wb";
    case InitMethod::SD: return "sd";
    case InitMethod::ID: return "id";
  }
  return "?";
}

InitMethod init_method_from_string(const std::string& name) {
  if (name == "zero") return InitMethod::Zero;
  if (name == "wb") return InitMethod::WB;
  if (name == "sd") return InitMethod::SD;
  if (name == "id") return InitMethod::ID;
  throw Error(ErrorCode::InvalidArgument, "unknown init method '" + name + "'");
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Tolerance: return "tolerance";
    case StopReason::MaxIters: return "max-iters";
    case StopReason::Stalled: return "stalled";
  }
  return "?";
}

}  // namespace msq
