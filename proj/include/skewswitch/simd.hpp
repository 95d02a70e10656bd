#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Byte-lane modular arithmetic used by the matrix inner loops. Every kernel
// processes exactly kLanes bytes (one padded matrix row). Inputs must be
// reduced residues in [0, modulus) with modulus in [2, 128]; outputs are
// reduced the same way.
namespace skewswitch::simd {

inline constexpr std::size_t kLanes = 32;

struct ModKernels {
  std::string_view name;
  // dst = a + b (mod l)
  void (*add_mod)(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                  std::uint8_t modulus);
  // dst = a - b (mod l)
  void (*sub_mod)(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                  std::uint8_t modulus);
  // dst = a + c (mod l), c < l
  void (*add_scalar_mod)(std::uint8_t* dst, const std::uint8_t* a, std::uint8_t c,
                         std::uint8_t modulus);
  // true iff all kLanes bytes are zero
  bool (*all_zero)(const std::uint8_t* a);
};

const ModKernels& scalar_kernels();

// Every variant that is both compiled in and supported by this CPU,
// scalar first.
std::vector<const ModKernels*> available_kernels();

// The variant used by the library. Chosen once: the widest supported
// variant, unless SKEWSWITCH_SIMD=scalar|avx2 names another one.
const ModKernels& active_kernels();

}  // namespace skewswitch::simd
