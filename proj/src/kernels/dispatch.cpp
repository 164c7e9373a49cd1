#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace swim::kernels {

const KernelTable* avx2() {
#if defined(SWIM_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("SWIM_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
    const KernelTable* fast = avx2();
    return fast != nullptr ? fast : &scalar();
  }();
  return *chosen;
}

}  // namespace swim::kernels
