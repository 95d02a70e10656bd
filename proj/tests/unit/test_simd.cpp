#include <array>
#include <cstdint>
#include <cstdlib>

#include <gtest/gtest.h>

#include "seed.hpp"
#include "skewswitch/simd.hpp"

namespace {

namespace simd = skewswitch::simd;
using Lane = std::array<std::uint8_t, simd::kLanes>;

Lane random_lane(std::mt19937_64& g, int modulus) {
  Lane out;
  for (auto& x : out) x = static_cast<std::uint8_t>(testing_support::uniform(g, 0, modulus - 1));
  return out;
}

TEST(Simd, ScalarIsFirstAndActiveIsAvailable) {
  const auto variants = simd::available_kernels();
  ASSERT_FALSE(variants.empty());
  EXPECT_EQ(variants.front()->name, "scalar");
  bool found = false;
  for (const auto* v : variants) found = found || v == &simd::active_kernels();
  EXPECT_TRUE(found);
}

TEST(Simd, ScalarReferenceMatchesIntegerArithmetic) {
  auto g = testing_support::rng(21);
  const auto& k = simd::scalar_kernels();
  for (int modulus = 2; modulus <= 128; ++modulus) {
    const Lane a = random_lane(g, modulus), b = random_lane(g, modulus);
    const auto c = static_cast<std::uint8_t>(testing_support::uniform(g, 0, modulus - 1));
    Lane sum, diff, shifted;
    k.add_mod(sum.data(), a.data(), b.data(), static_cast<std::uint8_t>(modulus));
    k.sub_mod(diff.data(), a.data(), b.data(), static_cast<std::uint8_t>(modulus));
    k.add_scalar_mod(shifted.data(), a.data(), c, static_cast<std::uint8_t>(modulus));
    for (std::size_t i = 0; i < simd::kLanes; ++i) {
      ASSERT_EQ(sum[i], (a[i] + b[i]) % modulus);
      ASSERT_EQ(diff[i], (a[i] - b[i] + modulus) % modulus);
      ASSERT_EQ(shifted[i], (a[i] + c) % modulus);
    }
  }
}

// Every variant must agree with the scalar reference bit for bit, for
// every supported modulus, including the extreme residues.
TEST(Simd, VariantsMatchScalar) {
  auto g = testing_support::rng(22);
  const auto& ref = simd::scalar_kernels();
  for (const auto* k : simd::available_kernels()) {
    SCOPED_TRACE(std::string(k->name));
    for (int modulus = 2; modulus <= 128; ++modulus) {
      const auto l = static_cast<std::uint8_t>(modulus);
      for (int rep = 0; rep < 20; ++rep) {
        Lane a = random_lane(g, modulus), b = random_lane(g, modulus);
        if (rep == 0) {
          a.fill(static_cast<std::uint8_t>(modulus - 1));
          b.fill(static_cast<std::uint8_t>(modulus - 1));
        } else if (rep == 1) {
          a.fill(0);
          b.fill(static_cast<std::uint8_t>(modulus - 1));
        }
        const auto c = static_cast<std::uint8_t>(rep == 0 ? modulus - 1 : testing_support::uniform(g, 0, modulus - 1));
        Lane want, got;
        ref.add_mod(want.data(), a.data(), b.data(), l);
        k->add_mod(got.data(), a.data(), b.data(), l);
        ASSERT_EQ(want, got) << "add l=" << modulus;
        ref.sub_mod(want.data(), a.data(), b.data(), l);
        k->sub_mod(got.data(), a.data(), b.data(), l);
        ASSERT_EQ(want, got) << "sub l=" << modulus;
        ref.add_scalar_mod(want.data(), a.data(), c, l);
        k->add_scalar_mod(got.data(), a.data(), c, l);
        ASSERT_EQ(want, got) << "add_scalar l=" << modulus;
        ASSERT_EQ(ref.all_zero(a.data()), k->all_zero(a.data()));
      }
    }
  }
}

TEST(Simd, AllZeroDetectsEveryLane) {
  for (const auto* k : simd::available_kernels()) {
    Lane a{};
    EXPECT_TRUE(k->all_zero(a.data()));
    for (std::size_t i = 0; i < simd::kLanes; ++i) {
      a.fill(0);
      a[i] = 1;
      EXPECT_FALSE(k->all_zero(a.data())) << k->name << " lane " << i;
      a[i] = 0x80;
      EXPECT_FALSE(k->all_zero(a.data())) << k->name << " lane " << i;
    }
  }
}

// In-place use (dst aliasing an input) is how the matrix code calls them.
TEST(Simd, InPlaceOperands) {
  auto g = testing_support::rng(23);
  for (const auto* k : simd::available_kernels()) {
    for (int modulus : {2, 3, 4, 7, 64, 127, 128}) {
      const auto l = static_cast<std::uint8_t>(modulus);
      Lane a = random_lane(g, modulus);
      const Lane b = random_lane(g, modulus);
      Lane want;
      simd::scalar_kernels().add_mod(want.data(), a.data(), b.data(), l);
      k->add_mod(a.data(), a.data(), b.data(), l);
      EXPECT_EQ(a, want) << k->name;
    }
  }
}

}  // namespace
