#include <cstdlib>
#include <string_view>

#include "simd/variants.hpp"

namespace skewswitch::simd {

namespace {

bool cpu_has_avx2() {
#if defined(SKEWSWITCH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const ModKernels& select() {
  const auto variants = available_kernels();
  if (const char* forced = std::getenv("SKEWSWITCH_SIMD")) {
    for (const ModKernels* k : variants) {
      if (k->name == std::string_view(forced)) return *k;
    }
  }
  return *variants.back();
}

}  // namespace

std::vector<const ModKernels*> available_kernels() {
  std::vector<const ModKernels*> out{&scalar_kernels()};
#if defined(SKEWSWITCH_HAVE_AVX2)
  if (cpu_has_avx2()) out.push_back(&detail::avx2_kernels());
#endif
  return out;
}

const ModKernels& active_kernels() {
  static const ModKernels& chosen = select();
  return chosen;
}

}  // namespace skewswitch::simd
