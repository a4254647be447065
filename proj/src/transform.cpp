#include "msq/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "msq/kernels.hpp"

namespace msq {
namespace {

// Orthonormal Daubechies analysis low-pass filters, sum = sqrt(2).
const std::vector<double>& daubechies_lowpass(int order) {
  static const std::vector<double> db1 = {0.7071067811865476,
                                          0.7071067811865476};
  static const std::vector<double> db2 = {
      0.4829629131445341, 0.8365163037378079, 0.2241438680420134,
      -0.1294095225512604};
  static const std::vector<double> db3 = {
      0.3326705529509569,  0.8068915093133388,  0.4598775021193313,
      -0.1350110200103908, -0.0854412738822415, 0.0352262918821007};
  static const std::vector<double> db4 = {
      0.2303778133088552,  0.7148465705525415,  0.6308807679295904,
      -0.0279837694169839, -0.1870348117188811, 0.0308413818359870,
      0.0328830116669829,  -0.0105974017849973};
  switch (order) {
    case 1: return db1;
    case 2: return db2;
    case 3: return db3;
    case 4: return db4;
  }
  throw Error(ErrorCode::InvalidArgument,
              "wavelet order must be 1..4, got " + std::to_string(order));
}

std::vector<double> qmf_highpass(const std::vector<double>& h) {
  const std::size_t len = h.size();
  std::vector<double> g(len);
  for (std::size_t j = 0; j < len; ++j) {
    g[j] = (j % 2 == 0 ? 1.0 : -1.0) * h[len - 1 - j];
  }
  return g;
}

int max_even_levels(int n) {
  int levels = 0;
  while (n >= 2 && n % 2 == 0) {
    ++levels;
    n /= 2;
  }
  return levels;
}

struct Wavelet {
  std::vector<double> h;  // analysis low-pass
  std::vector<double> g;  // analysis high-pass
};

Wavelet make_wavelet(int order) {
  const std::vector<double>& h = daubechies_lowpass(order);
  return {h, qmf_highpass(h)};
}

// One periodized analysis step on a strided signal of even length n.
void analysis_step(double* data, int n, int stride, const Wavelet& w,
                   std::vector<double>& buf) {
  const int half = n / 2;
  const int len = static_cast<int>(w.h.size());
  buf.resize(n);
  for (int i = 0; i < half; ++i) {
    double a = 0.0;
    double d = 0.0;
    for (int j = 0; j < len; ++j) {
      const double s = data[((2 * i + j) % n) * stride];
      a += w.h[j] * s;
      d += w.g[j] * s;
    }
    buf[i] = a;
    buf[half + i] = d;
  }
  for (int i = 0; i < n; ++i) data[i * stride] = buf[i];
}

// Transpose of analysis_step.
void synthesis_step(double* data, int n, int stride, const Wavelet& w,
                    std::vector<double>& buf) {
  const int half = n / 2;
  const int len = static_cast<int>(w.h.size());
  buf.assign(n, 0.0);
  for (int i = 0; i < half; ++i) {
    const double a = data[i * stride];
    const double d = data[(half + i) * stride];
    for (int j = 0; j < len; ++j) {
      buf[(2 * i + j) % n] += w.h[j] * a + w.g[j] * d;
    }
  }
  for (int i = 0; i < n; ++i) data[i * stride] = buf[i];
}

void check_image(const std::vector<double>& image, int h, int w) {
  if (h < 1 || w < 1 ||
      image.size() != static_cast<std::size_t>(h) * static_cast<std::size_t>(w)) {
    throw Error(ErrorCode::ShapeMismatch, "image size does not match h*w");
  }
}

std::vector<double> build_dct_matrix(int bands) {
  std::vector<double> m(static_cast<std::size_t>(bands) * bands);
  const double s0 = std::sqrt(1.0 / bands);
  const double sk = std::sqrt(2.0 / bands);
  for (int k = 0; k < bands; ++k) {
    for (int j = 0; j < bands; ++j) {
      m[static_cast<std::size_t>(k) * bands + j] =
          (k == 0 ? s0 : sk) *
          std::cos(std::numbers::pi * (j + 0.5) * k / bands);
    }
  }
  return m;
}

std::vector<double> transpose(const std::vector<double>& m, int rows, int cols) {
  std::vector<double> t(m.size());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      t[static_cast<std::size_t>(c) * rows + r] =
          m[static_cast<std::size_t>(r) * cols + c];
  return t;
}

// Mixes cube bands with the bands x bands matrix m: out_k = sum_j m[k][j] in_j.
HyperCube mix_bands(const HyperCube& cube, const std::vector<double>& m) {
  const int bands = cube.bands();
  HyperCube out(cube.height(), cube.width(), cube.bands());
  std::vector<const double*> in_planes(bands);
  std::vector<double*> out_planes(bands);
  for (int k = 0; k < bands; ++k) {
    in_planes[k] = cube.band(k);
    out_planes[k] = out.band(k);
  }
  kernels::active().plane_mix(in_planes.data(), bands, out_planes.data(), bands,
                              m.data(), cube.plane_size());
  return out;
}

}  // namespace

int resolve_levels(const TransformSpec& spec, int height, int width) {
  const int feasible = std::min(max_even_levels(height), max_even_levels(width));
  if (spec.levels > 0) {
    if (spec.levels > feasible) {
      throw Error(ErrorCode::ImageTooSmall,
                  "requested " + std::to_string(spec.levels) +
                      " levels, but " + std::to_string(height) + "x" +
                      std::to_string(width) + " supports only " +
                      std::to_string(feasible));
    }
    return spec.levels;
  }
  const int smaller = std::min(height, width);
  const int log2_floor = smaller > 0 ? std::bit_width(static_cast<unsigned>(smaller)) - 1 : 0;
  const int wanted = std::max(1, std::min(4, log2_floor - 2));
  const int levels = std::min(wanted, feasible);
  if (levels < 1) {
    throw Error(ErrorCode::ImageTooSmall,
                "image " + std::to_string(height) + "x" + std::to_string(width) +
                    " has no even-splittable dimension");
  }
  return levels;
}

std::vector<double> dwt2_forward(const std::vector<double>& image, int height,
                                 int width, const TransformSpec& spec) {
  check_image(image, height, width);
  const int levels = resolve_levels(spec, height, width);
  const Wavelet w = make_wavelet(spec.wavelet_order);
  std::vector<double> c = image;
  std::vector<double> buf;
  for (int level = 0; level < levels; ++level) {
    const int bh = height >> level;
    const int bw = width >> level;
    for (int y = 0; y < bh; ++y) {
      analysis_step(c.data() + static_cast<std::size_t>(y) * width, bw, 1, w, buf);
    }
    for (int x = 0; x < bw; ++x) {
      analysis_step(c.data() + x, bh, width, w, buf);
    }
  }
  return c;
}

std::vector<double> dwt2_inverse(const std::vector<double>& coeffs, int height,
                                 int width, const TransformSpec& spec) {
  check_image(coeffs, height, width);
  const int levels = resolve_levels(spec, height, width);
  const Wavelet w = make_wavelet(spec.wavelet_order);
  std::vector<double> c = coeffs;
  std::vector<double> buf;
  for (int level = levels - 1; level >= 0; --level) {
    const int bh = height >> level;
    const int bw = width >> level;
    for (int x = 0; x < bw; ++x) {
      synthesis_step(c.data() + x, bh, width, w, buf);
    }
    for (int y = 0; y < bh; ++y) {
      synthesis_step(c.data() + static_cast<std::size_t>(y) * width, bw, 1, w, buf);
    }
  }
  return c;
}

std::vector<double> dct_spectral_forward(std::span<const double> fiber) {
  const int bands = static_cast<int>(fiber.size());
  const std::vector<double> m = build_dct_matrix(bands);
  std::vector<double> out(bands, 0.0);
  for (int k = 0; k < bands; ++k) {
    double acc = 0.0;
    for (int j = 0; j < bands; ++j) {
      acc += m[static_cast<std::size_t>(k) * bands + j] * fiber[j];
    }
    out[k] = acc;
  }
  return out;
}

std::vector<double> dct_spectral_inverse(std::span<const double> coeffs) {
  const int bands = static_cast<int>(coeffs.size());
  const std::vector<double> m = build_dct_matrix(bands);
  std::vector<double> out(bands, 0.0);
  for (int j = 0; j < bands; ++j) {
    double acc = 0.0;
    for (int k = 0; k < bands; ++k) {
      acc += m[static_cast<std::size_t>(k) * bands + j] * coeffs[k];
    }
    out[j] = acc;
  }
  return out;
}

HyperCube psi_forward(const HyperCube& cube, const TransformSpec& spec) {
  const int h = cube.height();
  const int w = cube.width();
  HyperCube spatial(h, w, cube.bands());
  for (int k = 0; k < cube.bands(); ++k) {
    std::vector<double> band(cube.band(k), cube.band(k) + cube.plane_size());
    std::vector<double> coeffs = dwt2_forward(band, h, w, spec);
    std::copy(coeffs.begin(), coeffs.end(), spatial.band(k));
  }
  return mix_bands(spatial, build_dct_matrix(cube.bands()));
}

HyperCube psi_inverse(const HyperCube& coeffs, const TransformSpec& spec) {
  const int h = coeffs.height();
  const int w = coeffs.width();
  HyperCube spatial = mix_bands(
      coeffs, transpose(build_dct_matrix(coeffs.bands()), coeffs.bands(),
                        coeffs.bands()));
  HyperCube out(h, w, coeffs.bands());
  for (int k = 0; k < coeffs.bands(); ++k) {
    std::vector<double> band(spatial.band(k), spatial.band(k) + spatial.plane_size());
    std::vector<double> image = dwt2_inverse(band, h, w, spec);
    std::copy(image.begin(), image.end(), out.band(k));
  }
  return out;
}

std::vector<double> hard_threshold_topk(const std::vector<double>& values,
                                        std::size_t k) {
  if (k >= values.size()) return values;
  std::vector<double> out(values.size(), 0.0);
  if (k == 0) return out;
  if (values.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "coefficient array too large");
  }
  std::vector<std::uint32_t> idx(values.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto larger = [&values](std::uint32_t a, std::uint32_t b) {
    const double ma = std::abs(values[a]);
    const double mb = std::abs(values[b]);
    if (ma != mb) return ma > mb;
    return a < b;
  };
  std::nth_element(idx.begin(), idx.begin() + k - 1, idx.end(), larger);
  for (std::size_t i = 0; i < k; ++i) out[idx[i]] = values[idx[i]];
  return out;
}

}  // namespace msq
