// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64 and must only be entered after runtime detection.
#include "msq/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace msq::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4),
                           acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sumsq_avx2(const double* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(a + i);
    const __m256d v1 = _mm256_loadu_pd(a + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sumsq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d d1 =
        _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    acc1 = _mm256_fmadd_pd(d1, d1, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void sub_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void div_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_div_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] / b[i];
}

void plane_mix_avx2(const double* const* in, std::size_t nin,
                    double* const* out, std::size_t nout, const double* m,
                    std::size_t n) {
  for (std::size_t k = 0; k < nout; ++k) {
    double* dst = out[k];
    const double* row = m + k * nin;
    const __m256d c0 = _mm256_set1_pd(row[0]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      _mm256_storeu_pd(dst + i, _mm256_mul_pd(c0, _mm256_loadu_pd(in[0] + i)));
    }
    for (; i < n; ++i) dst[i] = row[0] * in[0][i];
    for (std::size_t j = 1; j < nin; ++j) {
      const __m256d c = _mm256_set1_pd(row[j]);
      const double* src = in[j];
      i = 0;
      for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_fmadd_pd(c, _mm256_loadu_pd(src + i),
                                                  _mm256_loadu_pd(dst + i)));
      }
      for (; i < n; ++i) dst[i] += row[j] * src[i];
    }
  }
}

void conv7_rows_avx2(const double* in, double* out, int h, int w,
                     const double* taps) {
  if (w < 10) {
    // Too narrow for a vectorized interior; defer to the reference loop.
    scalar().conv7_rows(in, out, h, w, taps);
    return;
  }
  __m256d vt[7];
  for (int j = 0; j < 7; ++j) vt[j] = _mm256_set1_pd(taps[j]);
  for (int y = 0; y < h; ++y) {
    const double* src = in + static_cast<std::size_t>(y) * w;
    double* dst = out + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < 3; ++x) {
      double acc = 0.0;
      for (int j = -x; j <= 3; ++j) acc += taps[j + 3] * src[x + j];
      dst[x] = acc;
    }
    int x = 3;
    for (; x + 4 <= w - 3; x += 4) {
      __m256d acc = _mm256_mul_pd(vt[0], _mm256_loadu_pd(src + x - 3));
      for (int j = 1; j < 7; ++j) {
        acc = _mm256_fmadd_pd(vt[j], _mm256_loadu_pd(src + x - 3 + j), acc);
      }
      _mm256_storeu_pd(dst + x, acc);
    }
    for (; x < w; ++x) {
      const int j1 = x + 3 < w ? 3 : w - 1 - x;
      double acc = 0.0;
      for (int j = -3; j <= j1; ++j) acc += taps[j + 3] * src[x + j];
      dst[x] = acc;
    }
  }
}

void conv7_cols_avx2(const double* in, double* out, int h, int w,
                     const double* taps) {
  for (int y = 0; y < h; ++y) {
    const int j0 = y >= 3 ? -3 : -y;
    const int j1 = y + 3 < h ? 3 : h - 1 - y;
    double* dst = out + static_cast<std::size_t>(y) * w;
    {
      const __m256d c = _mm256_set1_pd(taps[j0 + 3]);
      const double* src = in + static_cast<std::size_t>(y + j0) * w;
      int x = 0;
      for (; x + 4 <= w; x += 4) {
        _mm256_storeu_pd(dst + x, _mm256_mul_pd(c, _mm256_loadu_pd(src + x)));
      }
      for (; x < w; ++x) dst[x] = taps[j0 + 3] * src[x];
    }
    for (int j = j0 + 1; j <= j1; ++j) {
      const __m256d c = _mm256_set1_pd(taps[j + 3]);
      const double* src = in + static_cast<std::size_t>(y + j) * w;
      int x = 0;
      for (; x + 4 <= w; x += 4) {
        _mm256_storeu_pd(dst + x, _mm256_fmadd_pd(c, _mm256_loadu_pd(src + x),
                                                  _mm256_loadu_pd(dst + x)));
      }
      for (; x < w; ++x) dst[x] += taps[j + 3] * src[x];
    }
  }
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops = {
      "avx2",          dot_avx2, sumsq_avx2, sumsq_diff_avx2,
      axpy_avx2,       scal_avx2, sub_avx2,  mul_avx2,
      div_avx2,        plane_mix_avx2, conv7_rows_avx2,
      conv7_cols_avx2,
  };
  return &ops;
}

}  // namespace msq::kernels

#else

namespace msq::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace msq::kernels

#endif
