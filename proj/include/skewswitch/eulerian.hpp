#pragma once

#include <cstdint>
#include <vector>

#include "skewswitch/skewmat.hpp"

namespace skewswitch {

// Row sums of a matrix mod l, bucketed by value: buckets[k] holds the
// vertices whose row sums to k (U_k, 0-based vertices, ascending).
struct RowSumProfile {
  int modulus = 0;
  std::vector<int> sums;
  std::vector<std::vector<int>> buckets;

  // sum_k k * |U_k| mod l; zero for every skew-symmetric input.
  int weighted_bucket_sum() const;
};

bool is_modular_eulerian(const AltMatrix& m);

RowSumProfile row_sum_profile(const AltMatrix& m);

struct Eulerization {
  AltMatrix matrix;
  // a_v = s * k for v in U_k, exactly as applied (not normalized).
  SwitchExponents exponents;
  // s with s * n = 1 mod l.
  int inverse_of_size;
  RowSumProfile profile;
};

// Switches m into the unique modular Eulerian matrix of its pure switching
// orbit. Requires gcd(n, l) = 1; throws NotCoprime otherwise.
Eulerization eulerize(const AltMatrix& m);

// Largest l^(n-1) that eulerian_in_orbit will enumerate.
inline constexpr std::uint64_t kOrbitGuard = 10'000'000;

// Every modular Eulerian matrix of the form switch_many(m, a) with a_0 = 0,
// deduplicated exactly and sorted. Throws GuardExceeded past kOrbitGuard.
std::vector<AltMatrix> eulerian_in_orbit(const AltMatrix& m);

}  // namespace skewswitch
