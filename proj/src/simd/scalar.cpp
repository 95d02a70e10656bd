#include "skewswitch/simd.hpp"

namespace skewswitch::simd {

namespace {

void add_mod(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
             std::uint8_t modulus) {
  for (std::size_t k = 0; k < kLanes; ++k) {
    unsigned s = unsigned{a[k]} + b[k];
    dst[k] = static_cast<std::uint8_t>(s >= modulus ? s - modulus : s);
  }
}

void sub_mod(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
             std::uint8_t modulus) {
  for (std::size_t k = 0; k < kLanes; ++k) {
    dst[k] = static_cast<std::uint8_t>(a[k] >= b[k] ? a[k] - b[k] : a[k] + modulus - b[k]);
  }
}

void add_scalar_mod(std::uint8_t* dst, const std::uint8_t* a, std::uint8_t c,
                    std::uint8_t modulus) {
  for (std::size_t k = 0; k < kLanes; ++k) {
    unsigned s = unsigned{a[k]} + c;
    dst[k] = static_cast<std::uint8_t>(s >= modulus ? s - modulus : s);
  }
}

bool all_zero(const std::uint8_t* a) {
  for (std::size_t k = 0; k < kLanes; ++k) {
    if (a[k] != 0) return false;
  }
  return true;
}

}  // namespace

const ModKernels& scalar_kernels() {
  static const ModKernels kernels{"scalar", add_mod, sub_mod, add_scalar_mod, all_zero};
  return kernels;
}

}  // namespace skewswitch::simd
