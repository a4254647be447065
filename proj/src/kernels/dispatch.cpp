// Runtime selection of the kernel variant.
#include "msq/kernels.hpp"

#include <cstdlib>
#include <string>

namespace msq::kernels {

const Ops* avx2_ops();  // defined in avx2.cpp, null off-x86
const Ops* neon_ops();  // defined in neon.cpp, null off-aarch64

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* best_simd() {
  if (const Ops* ops = avx2_ops(); ops && cpu_has_avx2()) return ops;
  if (const Ops* ops = neon_ops()) return ops;
  return nullptr;
}

const Ops& select() {
  const char* env = std::getenv("MSQ_KERNELS");
  const std::string want = env ? env : "auto";
  if (want == "scalar") return scalar();
  if (want == "avx2") {
    if (const Ops* ops = avx2_ops(); ops && cpu_has_avx2()) return *ops;
    return scalar();
  }
  if (want == "neon") {
    if (const Ops* ops = neon_ops()) return *ops;
    return scalar();
  }
  if (const Ops* ops = best_simd()) return *ops;
  return scalar();
}

}  // namespace

const Ops& active() {
  static const Ops& chosen = select();
  return chosen;
}

std::vector<const Ops*> available() {
  std::vector<const Ops*> out{&scalar()};
  if (const Ops* ops = avx2_ops(); ops && cpu_has_avx2()) out.push_back(ops);
  if (const Ops* ops = neon_ops()) out.push_back(ops);
  return out;
}

}  // namespace msq::kernels
