#pragma once

#include "skewswitch/simd.hpp"

namespace skewswitch::simd::detail {

#if defined(SKEWSWITCH_HAVE_AVX2)
const ModKernels& avx2_kernels();
#endif

}  // namespace skewswitch::simd::detail
