#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewswitch/modlinalg.hpp"
#include "skewswitch/simd.hpp"

namespace skewswitch {

// Vertices are 0-based throughout the C++ API; only the file formats and
// the command line use 1-based labels.
//
// A permutation is stored as its image vector: sigma[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse(const Permutation& sigma);
bool is_permutation(const Permutation& sigma, int n);

// A vector a in (Z/lZ)^n; a[v] counts applications of the switching at v.
class SwitchExponents {
 public:
  SwitchExponents(int modulus, std::vector<int> values);

  static SwitchExponents zero(int modulus, int n);
  static SwitchExponents unit(int modulus, int n, int v);

  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& values() const { return values_; }

  // The same lattice element with a[0] shifted to zero. Constant vectors
  // act trivially, so this is the canonical representative.
  SwitchExponents normalized() const;

  friend bool operator==(const SwitchExponents&, const SwitchExponents&) = default;

 private:
  int modulus_;
  std::vector<int> values_;
};

// An n x n skew-symmetric matrix over Z/lZ.
//
// Rows are stored as padded byte lanes of simd::kLanes entries so the
// arithmetic kernels can process a whole row at once. Padding is always
// zero, which makes equality and ordering structural (row-major lex).
class AltMatrix {
 public:
  static constexpr int kMaxSize = static_cast<int>(simd::kLanes);
  static constexpr int kMaxModulus = 128;

  // Validates and reduces a raw integer grid. Throws ValidationError naming
  // the first offending cell (1-indexed).
  static AltMatrix make(int modulus, int size, const std::vector<std::vector<long>>& raw);
  static AltMatrix zero(int modulus, int size);

  int modulus() const { return modulus_; }
  int size() const { return size_; }
  int at(int i, int j) const { return data_[index(i, j)]; }
  modlinalg::Residue residue(int i, int j) const { return {at(i, j), modulus_}; }

  // Returns a copy with m_ij = value and m_ji = -value.
  AltMatrix with_entry(int i, int j, long value) const;

  std::vector<std::vector<int>> rows() const;

  const std::uint8_t* row_data(int i) const { return data_.data() + index(i, 0); }

  friend bool operator==(const AltMatrix&, const AltMatrix&) = default;
  friend std::strong_ordering operator<=>(const AltMatrix& a, const AltMatrix& b);

 private:
  friend class AltMatrixBuilder;

  AltMatrix(int modulus, int size);

  static std::size_t index(int i, int j) {
    return static_cast<std::size_t>(i) * simd::kLanes + static_cast<std::size_t>(j);
  }
  std::uint8_t* mutable_row(int i) { return data_.data() + index(i, 0); }
  void clear_padding(int i);

  int modulus_;
  int size_;
  std::vector<std::uint8_t> data_;
};

// Certifies relabel(switch_many(M, exponents), sigma) == M'.
struct EquivWitness {
  Permutation sigma;
  SwitchExponents exponents;
};

// Triple sums t_ijh = m_ij + m_jh + m_hi (mod l) for i < j < h, in
// lexicographic order of (i, j, h).
class TripleTensor {
 public:
  TripleTensor(int modulus, int size, std::vector<std::uint8_t> values);

  int modulus() const { return modulus_; }
  int size() const { return size_; }
  const std::vector<std::uint8_t>& values() const { return values_; }
  int at(int i, int j, int h) const;

  friend bool operator==(const TripleTensor&, const TripleTensor&) = default;
  friend std::strong_ordering operator<=>(const TripleTensor& a, const TripleTensor& b);

 private:
  int modulus_;
  int size_;
  std::vector<std::uint8_t> values_;
};

// mu_v: row v decremented, column v incremented.
AltMatrix switch_at(const AltMatrix& m, int v);

// result_ij = m_ij - a_i + a_j
AltMatrix switch_many(const AltMatrix& m, const SwitchExponents& a);

// result_{sigma(i) sigma(j)} = m_ij
AltMatrix relabel(const AltMatrix& m, const Permutation& sigma);

// Entrywise a - b; both operands must share modulus and size.
AltMatrix difference(const AltMatrix& a, const AltMatrix& b);

TripleTensor triple_tensor(const AltMatrix& m);

// If d_ij = a_j - a_i for some a, returns that a with a_0 = 0.
std::optional<SwitchExponents> potential_witness(const AltMatrix& d);

// Lexicographically first sigma (as an image vector) together with its
// normalized exponents, or nothing when M and M' are not switching
// equivalent.
std::optional<EquivWitness> switching_equivalent(const AltMatrix& m, const AltMatrix& target);

// Lexicographically first sigma with relabel(m, sigma) == target.
std::optional<Permutation> isomorphic(const AltMatrix& m, const AltMatrix& target);

// Lex-minimal triple tensor over all relabelings; a complete invariant of
// the switching class.
TripleTensor canonical_class_form(const AltMatrix& m);

// Lex-minimal relabeling (row-major); a complete isomorphism invariant.
AltMatrix canonical_iso_form(const AltMatrix& m);

// The unique pure switching of m whose row and column v are zero.
AltMatrix isolate(const AltMatrix& m, int v);

bool verify_witness(const AltMatrix& m, const AltMatrix& target, const EquivWitness& w);

}  // namespace skewswitch
