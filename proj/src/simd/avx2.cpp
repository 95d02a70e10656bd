#include <immintrin.h>

#include "simd/variants.hpp"

namespace skewswitch::simd::detail {

namespace {

// For x in [0, 2l - 2] with l <= 128, x - l wraps above x exactly when
// x < l, so an unsigned min performs the conditional subtraction.
inline __m256i fold(__m256i x, __m256i modulus) {
  return _mm256_min_epu8(x, _mm256_sub_epi8(x, modulus));
}

void add_mod(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
             std::uint8_t modulus) {
  const __m256i l = _mm256_set1_epi8(static_cast<char>(modulus));
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), fold(_mm256_add_epi8(va, vb), l));
}

void sub_mod(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
             std::uint8_t modulus) {
  const __m256i l = _mm256_set1_epi8(static_cast<char>(modulus));
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  // a - b wraps to >= 256 - l + 1 when a < b; adding l then yields the
  // residue, which is the smaller of the two candidates.
  const __m256i d = _mm256_sub_epi8(va, vb);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst),
                      _mm256_min_epu8(d, _mm256_add_epi8(d, l)));
}

void add_scalar_mod(std::uint8_t* dst, const std::uint8_t* a, std::uint8_t c,
                    std::uint8_t modulus) {
  const __m256i l = _mm256_set1_epi8(static_cast<char>(modulus));
  const __m256i vc = _mm256_set1_epi8(static_cast<char>(c));
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), fold(_mm256_add_epi8(va, vc), l));
}

bool all_zero(const std::uint8_t* a) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  return _mm256_testz_si256(va, va) != 0;
}

}  // namespace

const ModKernels& avx2_kernels() {
  static const ModKernels kernels{"avx2", add_mod, sub_mod, add_scalar_mod, all_zero};
  return kernels;
}

}  // namespace skewswitch::simd::detail
