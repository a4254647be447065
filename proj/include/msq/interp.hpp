// Classical demosaicing: weighted bilinear (WB), spectral difference (SD)
// and intensity difference (ID). These serve both as baselines and as
// solver initializers.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msq/mosaic.hpp"
#include "msq/types.hpp"

namespace msq {

// 1D taps of the bilinear interpolation filter for stride-4 combs:
// (1/4) * [1 2 3 4 3 2 1]. The 2D kernel is the outer product.
// Stride-4 residue-class sums of the taps are exactly 1.
inline constexpr std::array<double, 7> kWbTaps = {0.25, 0.5,  0.75, 1.0,
                                                  0.75, 0.5,  0.25};

// Border handling. Normalized divides by the mask-convolved kernel, which
// reproduces constants exactly at image borders; PaperZeroPad is the plain
// zero-padded convolution, which attenuates borders.
enum class BorderMode { Normalized, PaperZeroPad };

// Interpolates one zero-padded sparse band. `sparse` must be zero off-mask.
// Throws EmptyMask when some pixel has no measured pixel within kernel reach.
std::vector<double> wb_interpolate_band(const std::vector<double>& sparse,
                                        const std::vector<std::uint8_t>& mask,
                                        int height, int width,
                                        BorderMode border = BorderMode::Normalized);

HyperCube wb_demosaic(const MosaicFrame& frame,
                      BorderMode border = BorderMode::Normalized);

HyperCube sd_demosaic(const MosaicFrame& frame,
                      BorderMode border = BorderMode::Normalized);

HyperCube id_demosaic(const MosaicFrame& frame,
                      BorderMode border = BorderMode::Normalized);

HyperCube demosaic_init(const MosaicFrame& frame, InitMethod init,
                        BorderMode border = BorderMode::Normalized);

}  // namespace msq
