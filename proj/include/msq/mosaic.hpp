// Sampling operator P_Omega and its adjoint: cube -> frame, frame -> cube.
#pragma once

#include <utility>

#include "msq/types.hpp"

namespace msq {

// Simulates a snapshot acquisition: raw(p) = cube(p, band_at(p)).
// Throws BandCountMismatch when cube.bands() != pattern.cells().
MosaicFrame apply_mosaic(const HyperCube& cube, const MosaicPattern& pattern);

// Adjoint: zero-padded cube with cube(p, band_at(p)) = raw(p).
// Throws BandCountMismatch when bands < max referenced band + 1.
HyperCube embed(const MosaicFrame& frame, int bands);

struct SampleResidual {
  MosaicFrame residual;
  double rel_norm = 0.0;
};

// residual = P_Omega cube - frame, rel_norm = |residual| / |frame|.
// rel_norm is 0 when both norms vanish; ZeroMeasurement when only |frame| does.
SampleResidual sample_residual(const HyperCube& cube, const MosaicFrame& frame);

}  // namespace msq
