// Shared data model: cubes, mosaic patterns, frames, solver configuration.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "msq/error.hpp"

namespace msq {

// Dense H x W x B cube of radiance samples, band-major (band, row, column).
// Arithmetic is done in double regardless of storage precision.
class HyperCube {
 public:
  HyperCube() = default;
  HyperCube(int height, int width, int bands, double fill = 0.0);

  static HyperCube from_values(int height, int width, int bands,
                               std::vector<double> values);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int bands() const noexcept { return bands_; }
  std::size_t plane_size() const noexcept {
    return static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_);
  }
  std::size_t size() const noexcept { return plane_size() * bands_; }

  double& at(int y, int x, int band) noexcept {
    return values_[flat_index(y, x, band)];
  }
  double at(int y, int x, int band) const noexcept {
    return values_[flat_index(y, x, band)];
  }

  double* band(int b) noexcept { return values_.data() + plane_size() * b; }
  const double* band(int b) const noexcept {
    return values_.data() + plane_size() * b;
  }
  std::span<double> band_span(int b) noexcept {
    return {band(b), plane_size()};
  }
  std::span<const double> band_span(int b) const noexcept {
    return {band(b), plane_size()};
  }

  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  bool same_shape(const HyperCube& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_ &&
           bands_ == other.bands_;
  }

 private:
  std::size_t flat_index(int y, int x, int band) const noexcept {
    return (static_cast<std::size_t>(band) * height_ + y) * width_ + x;
  }

  int height_ = 0;
  int width_ = 0;
  int bands_ = 0;
  std::vector<double> values_;
};

// Throws on any violated HyperCube invariant (declared sizes vs. payload,
// non-finite entries). The error message carries the first offending index.
void validate_cube(const HyperCube& cube);

// Repeating supercell tile: band_of maps a cell offset to the band measured
// there. Bijective onto 0..cells-1 for IMEC-style patterns.
class MosaicPattern {
 public:
  MosaicPattern(int cell_rows, int cell_cols, std::vector<int> band_of);

  int cell_rows() const noexcept { return cell_rows_; }
  int cell_cols() const noexcept { return cell_cols_; }
  int cells() const noexcept { return cell_rows_ * cell_cols_; }

  int band_of(int cell_row, int cell_col) const noexcept {
    return band_of_[static_cast<std::size_t>(cell_row) * cell_cols_ + cell_col];
  }
  // Band measured at absolute pixel (y, x); pattern origin is pixel (0, 0).
  int band_at(int y, int x) const noexcept {
    return band_of(y % cell_rows_, x % cell_cols_);
  }

  const std::vector<int>& table() const noexcept { return band_of_; }
  bool is_bijective() const noexcept;

 private:
  int cell_rows_ = 0;
  int cell_cols_ = 0;
  std::vector<int> band_of_;
};

// The 4x4 IMEC-style pattern: cell (r, c) measures band 4*r + c.
MosaicPattern imec_4x4_pattern();

// Per-band sampling mask: mask(y, x) = 1 iff the pattern measures `band` at
// that pixel. Throws BandOutOfRange.
std::vector<std::uint8_t> mask_of(const MosaicPattern& pattern, int band,
                                  int height, int width);

// Raw sensor frame: one measurement per pixel plus the pattern that
// produced it.
class MosaicFrame {
 public:
  MosaicFrame() : pattern_(imec_4x4_pattern()) {}
  MosaicFrame(int height, int width, MosaicPattern pattern,
              std::vector<double> raw);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_);
  }

  double& at(int y, int x) noexcept {
    return raw_[static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int y, int x) const noexcept {
    return raw_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::vector<double>& raw() noexcept { return raw_; }
  const std::vector<double>& raw() const noexcept { return raw_; }
  const MosaicPattern& pattern() const noexcept { return pattern_; }

 private:
  int height_ = 0;
  int width_ = 0;
  MosaicPattern pattern_;
  std::vector<double> raw_;
};

enum class InitMethod { Zero, WB, SD, ID };

const char* init_method_name(InitMethod m);
InitMethod init_method_from_string(const std::string& name);

struct SolverConfig {
  int max_iters = 500;
  double rel_tol = 1e-7;
  int rank = 4;       // rank constraint for matrix completion
  int sparsity = 0;   // 0 = default ceil(0.10 * H*W*B)
  InitMethod init = InitMethod::SD;
};

enum class StopReason { Tolerance, MaxIters, Stalled };

const char* stop_reason_name(StopReason r);

struct SolveTrace {
  std::vector<double> residuals;  // relative residuals; [0] is the initial one
  int iterations = 0;
  StopReason stop_reason = StopReason::Tolerance;
  // ASD appends the objective value after every half-step here.
  std::vector<double> half_step_objectives;
};

struct MetricsReport {
  std::vector<double> psnr_per_band;  // dB; +inf for identical bands
  double psnr_mean = 0.0;             // over finite bands
  double psnr_std = 0.0;              // population std over finite bands
  double psnr_std_sample = 0.0;       // sample std, reported in verbose mode
  std::vector<double> ssim_per_band;
  double ssim_mean = 0.0;
  std::vector<int> infinite_bands;    // bands excluded from the PSNR mean
};

}  // namespace msq
