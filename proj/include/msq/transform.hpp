// Sparsifying transform: separable orthonormal 2D Daubechies wavelet in the
// spatial dimensions and an orthonormal DCT-II across bands. Forward and
// inverse are exact transposes of each other.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msq/types.hpp"

namespace msq {

struct TransformSpec {
  int wavelet_order = 2;  // Daubechies vanishing moments, 1..4
  int levels = 0;         // decomposition depth; 0 = automatic
};

// Depth actually used for an h x w image: the requested depth, or
// max(1, min(4, floor(log2(min(h,w))) - 2)) when automatic, clamped so every
// transformed block length stays even. Throws ImageTooSmall when even one
// level is impossible.
int resolve_levels(const TransformSpec& spec, int height, int width);

// Multi-level 2D periodized DWT. Same element count as the input, detail
// subbands packed around the shrinking approximation block.
std::vector<double> dwt2_forward(const std::vector<double>& image, int height,
                                 int width, const TransformSpec& spec);
std::vector<double> dwt2_inverse(const std::vector<double>& coeffs, int height,
                                 int width, const TransformSpec& spec);

// Orthonormal DCT-II of one spectral fiber and its inverse (the transpose).
std::vector<double> dct_spectral_forward(std::span<const double> fiber);
std::vector<double> dct_spectral_inverse(std::span<const double> coeffs);

// Psi: per-band 2D DWT followed by the spectral DCT. psi_inverse applies the
// inverse DCT then the inverse DWT; both maps are orthonormal, so the
// adjoint equals the inverse.
HyperCube psi_forward(const HyperCube& cube, const TransformSpec& spec);
HyperCube psi_inverse(const HyperCube& coeffs, const TransformSpec& spec);

// Euclidean projection onto {x : ||x||_0 <= k}: keeps the k largest-magnitude
// entries, ties broken by lowest flat index.
std::vector<double> hard_threshold_topk(const std::vector<double>& values,
                                        std::size_t k);

}  // namespace msq
