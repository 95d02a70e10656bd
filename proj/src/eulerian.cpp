#include "skewswitch/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "detail.hpp"
#include "skewswitch/errors.hpp"

namespace skewswitch {

namespace {

// Column sums accumulated lane-wise; since m is skew-symmetric the row
// sum of i is the negated column sum of i.
std::vector<int> row_sums(const AltMatrix& m) {
  const auto& k = simd::active_kernels();
  alignas(32) std::uint8_t acc[simd::kLanes] = {};
  for (int i = 0; i < m.size(); ++i) k.add_mod(acc, acc, m.row_data(i), modulus_byte(m));
  std::vector<int> sums(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    sums[static_cast<std::size_t>(i)] = acc[i] == 0 ? 0 : m.modulus() - acc[i];
  }
  return sums;
}

}  // namespace

int RowSumProfile::weighted_bucket_sum() const {
  long total = 0;
  for (std::size_t k = 0; k < buckets.size(); ++k) {
    total += static_cast<long>(k) * static_cast<long>(buckets[k].size());
  }
  return static_cast<int>(total % modulus);
}

bool is_modular_eulerian(const AltMatrix& m) {
  const auto& k = simd::active_kernels();
  alignas(32) std::uint8_t acc[simd::kLanes] = {};
  for (int i = 0; i < m.size(); ++i) k.add_mod(acc, acc, m.row_data(i), modulus_byte(m));
  return k.all_zero(acc);
}

RowSumProfile row_sum_profile(const AltMatrix& m) {
  RowSumProfile p;
  p.modulus = m.modulus();
  p.sums = row_sums(m);
  p.buckets.assign(static_cast<std::size_t>(m.modulus()), {});
  for (int i = 0; i < m.size(); ++i) {
    p.buckets[static_cast<std::size_t>(p.sums[static_cast<std::size_t>(i)])].push_back(i);
  }
  return p;
}

Eulerization eulerize(const AltMatrix& m) {
  const int n = m.size();
  const int l = m.modulus();
  if (std::gcd(n, l) != 1) {
    throw NotCoprime("eulerize needs gcd(n, l) = 1; got n = " + std::to_string(n) +
                     ", l = " + std::to_string(l));
  }
  int s = 1;
  while ((s * n) % l != 1 % l) ++s;

  RowSumProfile profile = row_sum_profile(m);
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (int k = 1; k < l; ++k) {
    for (int v : profile.buckets[static_cast<std::size_t>(k)]) {
      a[static_cast<std::size_t>(v)] = (s * k) % l;
    }
  }
  SwitchExponents exponents(l, std::move(a));
  AltMatrix out = switch_many(m, exponents);
  return Eulerization{std::move(out), std::move(exponents), s, std::move(profile)};
}

std::vector<AltMatrix> eulerian_in_orbit(const AltMatrix& m) {
  const int n = m.size();
  const int l = m.modulus();
  std::uint64_t total = 1;
  for (int i = 1; i < n; ++i) {
    total *= static_cast<std::uint64_t>(l);
    if (total > kOrbitGuard) {
      throw GuardExceeded("orbit too large: " + std::to_string(l) + "^" + std::to_string(n - 1) +
                          " switchings exceed the guard of " + std::to_string(kOrbitGuard));
    }
  }

  std::vector<AltMatrix> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    AltMatrix candidate = switch_many(m, SwitchExponents(l, a));
    if (is_modular_eulerian(candidate)) out.push_back(std::move(candidate));
    // odometer over a_1 .. a_{n-1}
    for (int v = n - 1; v >= 1; --v) {
      if (++a[static_cast<std::size_t>(v)] < l) break;
      a[static_cast<std::size_t>(v)] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace skewswitch
