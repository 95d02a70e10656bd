#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skewswitch/simd.hpp"
#include "skewswitch/skewmat.hpp"

namespace skewswitch {

// Write access to AltMatrix storage for library internals. Callers are
// responsible for leaving a skew-symmetric matrix with zero padding.
class AltMatrixBuilder {
 public:
  AltMatrixBuilder(int modulus, int size) : m_(modulus, size) {}
  explicit AltMatrixBuilder(AltMatrix m) : m_(std::move(m)) {}

  std::uint8_t* row(int i) { return m_.mutable_row(i); }
  void clear_padding(int i) { m_.clear_padding(i); }

  // value must already be reduced
  void set_pair(int i, int j, int value) {
    m_.data_[AltMatrix::index(i, j)] = static_cast<std::uint8_t>(value);
    m_.data_[AltMatrix::index(j, i)] =
        static_cast<std::uint8_t>(value == 0 ? 0 : m_.modulus_ - value);
  }

  AltMatrix build() && { return std::move(m_); }

 private:
  AltMatrix m_;
};

// Oriented triple sums T[a][b][c] = m_ab + m_bc + m_ca for all ordered
// (a, b, c), one padded lane per (a, b). T is antisymmetric under odd
// permutations of its indices and zero whenever two indices coincide.
class TripleTable {
 public:
  explicit TripleTable(const AltMatrix& m);

  int size() const { return n_; }
  int at(int a, int b, int c) const {
    return data_[(static_cast<std::size_t>(a) * n_ + b) * simd::kLanes + c];
  }
  const std::uint8_t* lane(int a, int b) const {
    return data_.data() + (static_cast<std::size_t>(a) * n_ + b) * simd::kLanes;
  }

 private:
  int n_;
  std::vector<std::uint8_t> data_;
};

inline std::uint8_t modulus_byte(const AltMatrix& m) {
  return static_cast<std::uint8_t>(m.modulus());
}

}  // namespace skewswitch
