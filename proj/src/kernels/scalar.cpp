// Scalar reference kernels. Plain loops, fixed left-to-right accumulation.
#include "msq/kernels.hpp"

namespace msq::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sumsq_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sumsq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void div_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] / b[i];
}

void plane_mix_scalar(const double* const* in, std::size_t nin,
                      double* const* out, std::size_t nout, const double* m,
                      std::size_t n) {
  for (std::size_t k = 0; k < nout; ++k) {
    double* dst = out[k];
    const double* row = m + k * nin;
    for (std::size_t i = 0; i < n; ++i) dst[i] = row[0] * in[0][i];
    for (std::size_t j = 1; j < nin; ++j) {
      const double c = row[j];
      const double* src = in[j];
      for (std::size_t i = 0; i < n; ++i) dst[i] += c * src[i];
    }
  }
}

void conv7_rows_scalar(const double* in, double* out, int h, int w,
                       const double* taps) {
  for (int y = 0; y < h; ++y) {
    const double* src = in + static_cast<std::size_t>(y) * w;
    double* dst = out + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const int j0 = x >= 3 ? -3 : -x;
      const int j1 = x + 3 < w ? 3 : w - 1 - x;
      double acc = 0.0;
      for (int j = j0; j <= j1; ++j) acc += taps[j + 3] * src[x + j];
      dst[x] = acc;
    }
  }
}

void conv7_cols_scalar(const double* in, double* out, int h, int w,
                       const double* taps) {
  for (int y = 0; y < h; ++y) {
    const int j0 = y >= 3 ? -3 : -y;
    const int j1 = y + 3 < h ? 3 : h - 1 - y;
    double* dst = out + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) dst[x] = 0.0;
    for (int j = j0; j <= j1; ++j) {
      const double c = taps[j + 3];
      const double* src = in + static_cast<std::size_t>(y + j) * w;
      for (int x = 0; x < w; ++x) dst[x] += c * src[x];
    }
  }
}

}  // namespace

const Ops& scalar() {
  static const Ops ops = {
      "scalar",          dot_scalar, sumsq_scalar, sumsq_diff_scalar,
      axpy_scalar,       scal_scalar, sub_scalar,  mul_scalar,
      div_scalar,        plane_mix_scalar, conv7_rows_scalar,
      conv7_cols_scalar,
  };
  return ops;
}

}  // namespace msq::kernels
