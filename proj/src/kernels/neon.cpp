// NEON kernel variants for aarch64 (double-precision, 2 lanes).
#include "msq/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace msq::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sumsq_neon(const double* a, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t v0 = vld1q_f64(a + i);
    const float64x2_t v1 = vld1q_f64(a + i + 2);
    acc0 = vfmaq_f64(acc0, v0, v0);
    acc1 = vfmaq_f64(acc1, v1, v1);
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sumsq_diff_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_neon(double alpha, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void sub_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void div_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vdivq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] / b[i];
}

void plane_mix_neon(const double* const* in, std::size_t nin,
                    double* const* out, std::size_t nout, const double* m,
                    std::size_t n) {
  for (std::size_t k = 0; k < nout; ++k) {
    double* dst = out[k];
    const double* row = m + k * nin;
    const float64x2_t c0 = vdupq_n_f64(row[0]);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      vst1q_f64(dst + i, vmulq_f64(c0, vld1q_f64(in[0] + i)));
    }
    for (; i < n; ++i) dst[i] = row[0] * in[0][i];
    for (std::size_t j = 1; j < nin; ++j) {
      const float64x2_t c = vdupq_n_f64(row[j]);
      const double* src = in[j];
      i = 0;
      for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vfmaq_f64(vld1q_f64(dst + i), c, vld1q_f64(src + i)));
      }
      for (; i < n; ++i) dst[i] += row[j] * src[i];
    }
  }
}

void conv7_rows_neon(const double* in, double* out, int h, int w,
                     const double* taps) {
  if (w < 8) {
    scalar().conv7_rows(in, out, h, w, taps);
    return;
  }
  float64x2_t vt[7];
  for (int j = 0; j < 7; ++j) vt[j] = vdupq_n_f64(taps[j]);
  for (int y = 0; y < h; ++y) {
    const double* src = in + static_cast<std::size_t>(y) * w;
    double* dst = out + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < 3; ++x) {
      double acc = 0.0;
      for (int j = -x; j <= 3; ++j) acc += taps[j + 3] * src[x + j];
      dst[x] = acc;
    }
    int x = 3;
    for (; x + 2 <= w - 3; x += 2) {
      float64x2_t acc = vmulq_f64(vt[0], vld1q_f64(src + x - 3));
      for (int j = 1; j < 7; ++j) {
        acc = vfmaq_f64(acc, vt[j], vld1q_f64(src + x - 3 + j));
      }
      vst1q_f64(dst + x, acc);
    }
    for (; x < w; ++x) {
      const int j1 = x + 3 < w ? 3 : w - 1 - x;
      double acc = 0.0;
      for (int j = -3; j <= j1; ++j) acc += taps[j + 3] * src[x + j];
      dst[x] = acc;
    }
  }
}

void conv7_cols_neon(const double* in, double* out, int h, int w,
                     const double* taps) {
  for (int y = 0; y < h; ++y) {
    const int j0 = y >= 3 ? -3 : -y;
    const int j1 = y + 3 < h ? 3 : h - 1 - y;
    double* dst = out + static_cast<std::size_t>(y) * w;
    {
      const float64x2_t c = vdupq_n_f64(taps[j0 + 3]);
      const double* src = in + static_cast<std::size_t>(y + j0) * w;
      int x = 0;
      for (; x + 2 <= w; x += 2) {
        vst1q_f64(dst + x, vmulq_f64(c, vld1q_f64(src + x)));
      }
      for (; x < w; ++x) dst[x] = taps[j0 + 3] * src[x];
    }
    for (int j = j0 + 1; j <= j1; ++j) {
      const float64x2_t c = vdupq_n_f64(taps[j + 3]);
      const double* src = in + static_cast<std::size_t>(y + j) * w;
      int x = 0;
      for (; x + 2 <= w; x += 2) {
        vst1q_f64(dst + x, vfmaq_f64(vld1q_f64(dst + x), c, vld1q_f64(src + x)));
      }
      for (; x < w; ++x) dst[x] += taps[j + 3] * src[x];
    }
  }
}

}  // namespace

const Ops* neon_ops() {
  static const Ops ops = {
      "neon",          dot_neon, sumsq_neon, sumsq_diff_neon,
      axpy_neon,       scal_neon, sub_neon,  mul_neon,
      div_neon,        plane_mix_neon, conv7_rows_neon,
      conv7_cols_neon,
  };
  return &ops;
}

}  // namespace msq::kernels

#else

namespace msq::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace msq::kernels

#endif
