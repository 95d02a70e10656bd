#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace skewswitch::modlinalg {

using BigInt = mpz_class;

// An element of Z/lZ, always stored reduced to [0, l-1].
class Residue {
 public:
  Residue(long value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  int value_;
  int modulus_;
};

// Reduces any integer into [0, modulus - 1].
int reduce(long value, int modulus);

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  // [this | right]
  IntMatrix hstack(const IntMatrix& right) const;
  // [this ; below]
  IntMatrix vstack(const IntMatrix& below) const;

  static IntMatrix identity(std::size_t n);
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_r followed by
// zeros, r = min(rows, cols). All entries are nonnegative.
struct SnfResult {
  std::vector<BigInt> diagonal;
};

SnfResult smith_normal_form(IntMatrix a);

// Number of x in (Z/lZ)^cols with A x = 0 (mod l), via the Smith normal
// form: prod gcd(l, d_i) * l^(cols - r), with gcd(l, 0) = l.
BigInt count_solutions_mod(const IntMatrix& a, int modulus);

// Rank of A over the prime field F_p.
std::size_t rank_mod_prime(const IntMatrix& a, int prime);

// Same count as count_solutions_mod, restricted to a prime modulus and
// computed by Gaussian elimination over F_p.
BigInt count_solutions_mod_prime(const IntMatrix& a, int prime);

bool is_prime(int value);

}  // namespace skewswitch::modlinalg
