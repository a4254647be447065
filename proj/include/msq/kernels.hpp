// Arithmetic inner loops behind the interpolators, transforms and solvers.
//
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup. The variant
// can be forced with the MSQ_KERNELS environment variable
// ("scalar", "avx2", "neon", "auto"). Reductions use a fixed accumulation
// order within each variant, so repeated runs on the same host are
// bit-identical.
#pragma once

#include <cstddef>
#include <vector>

namespace msq::kernels {

struct Ops {
  const char* name;

  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sumsq)(const double* a, std::size_t n);
  double (*sumsq_diff)(const double* a, const double* b, std::size_t n);

  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  void (*scal)(double alpha, double* x, std::size_t n);
  // out = a - b
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
  void (*div)(const double* a, const double* b, double* out, std::size_t n);

  // out[k][i] = sum_j m[k*nin + j] * in[j][i] for i in [0, n).
  // Output planes must not alias input planes.
  void (*plane_mix)(const double* const* in, std::size_t nin, double* const* out,
                    std::size_t nout, const double* m, std::size_t n);

  // 7-tap convolution with zero extension along rows / columns of an
  // h x w plane. `in` and `out` must be distinct.
  void (*conv7_rows)(const double* in, double* out, int h, int w,
                     const double* taps);
  void (*conv7_cols)(const double* in, double* out, int h, int w,
                     const double* taps);
};

// Scalar reference implementation; ground truth for equivalence tests.
const Ops& scalar();

// Variant selected for this process (CPU detection + MSQ_KERNELS override).
const Ops& active();

// All variants the current binary can run on this CPU (always starts with
// the scalar reference). Used by the equivalence test suite.
std::vector<const Ops*> available();

}  // namespace msq::kernels
