#include "skewswitch/modlinalg.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "skewswitch/errors.hpp"

namespace skewswitch::modlinalg {

namespace {

void check_modulus(int modulus) {
  if (modulus < 2) {
    throw InvalidModulus("modulus must be at least 2, got " +
                         std::to_string(modulus));
  }
}

}  // namespace

int reduce(long value, int modulus) {
  long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

Residue::Residue(long value, int modulus) : modulus_(modulus) {
  check_modulus(modulus);
  value_ = reduce(value, modulus);
}

Residue Residue::operator+(const Residue& o) const {
  return Residue(static_cast<long>(value_) + o.value_, modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  return Residue(static_cast<long>(value_) - o.value_, modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  return Residue(static_cast<long>(value_) * o.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-static_cast<long>(value_), modulus_); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw LengthMismatch("ragged IntMatrix initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw LengthMismatch("hstack: row counts differ");
  IntMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out.at(r, cols_ + c) = right.at(r, c);
  }
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (cols_ != below.cols_) throw LengthMismatch("vstack: column counts differ");
  IntMatrix out(rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LengthMismatch("shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - o.entries_[k];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
  return out;
}

SnfResult smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t r = std::min(rows, cols);
  SnfResult result;
  result.diagonal.assign(r, BigInt(0));

  BigInt q;
  for (std::size_t t = 0; t < r; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const BigInt& v = a.at(i, j);
          if (sgn(v) == 0) continue;
          if (pr == rows || mpz_cmpabs(v.get_mpz_t(), a.at(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return result;  // trailing block is zero

      if (pr != t) {
        for (std::size_t j = t; j < cols; ++j) swap(a.at(t, j), a.at(pr, j));
      }
      if (pc != t) {
        for (std::size_t i = t; i < rows; ++i) swap(a.at(i, t), a.at(i, pc));
      }

      bool clean = true;
      const BigInt pivot = a.at(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a.at(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a.at(t, j)) != 0) a.at(i, j) -= q * a.at(t, j);
        }
        if (sgn(a.at(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a.at(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) {
          if (sgn(a.at(i, t)) != 0) a.at(i, j) -= q * a.at(i, t);
        }
        if (sgn(a.at(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility d_t | every trailing entry; otherwise fold the
      // offending row into row t and pivot again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a.at(t, j) += a.at(bad, j);
    }
    result.diagonal[t] = abs(a.at(t, t));
  }
  return result;
}

BigInt count_solutions_mod(const IntMatrix& a, int modulus) {
  check_modulus(modulus);
  // The count only depends on A mod l; reducing first keeps the entries
  // small without changing the answer.
  IntMatrix reduced(a.rows(), a.cols());
  const BigInt ell(modulus);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      BigInt v;
      mpz_fdiv_r(v.get_mpz_t(), a.at(i, j).get_mpz_t(), ell.get_mpz_t());
      if (2 * v > ell) v -= ell;
      reduced.at(i, j) = v;
    }
  }
  const SnfResult snf = smith_normal_form(std::move(reduced));

  BigInt count(1);
  BigInt g;
  for (const BigInt& d : snf.diagonal) {
    if (sgn(d) == 0) {
      count *= ell;
    } else {
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), ell.get_mpz_t());
      count *= g;
    }
  }
  const std::size_t free_cols = a.cols() - snf.diagonal.size();
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(modulus), free_cols);
  return count * power;
}

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::size_t rank_mod_prime(const IntMatrix& a, int prime) {
  if (!is_prime(prime)) {
    throw InvalidModulus("rank_mod_prime needs a prime modulus, got " + std::to_string(prime));
  }
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::int64_t> m(rows * cols);
  const BigInt p(prime);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt v;
      mpz_fdiv_r(v.get_mpz_t(), a.at(i, j).get_mpz_t(), p.get_mpz_t());
      m[i * cols + j] = v.get_si();
    }
  }
  auto inverse = [prime](std::int64_t x) {
    // Fermat: x^(p-2) mod p.
    std::int64_t result = 1, base = x % prime;
    for (long e = prime - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % prime;
      base = base * base % prime;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    }
    const std::int64_t inv = inverse(m[rank * cols + c]);
    for (std::size_t j = c; j < cols; ++j) m[rank * cols + j] = m[rank * cols + j] * inv % prime;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = m[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[i * cols + j] = ((m[i * cols + j] - f * m[rank * cols + j]) % prime + prime) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

BigInt count_solutions_mod_prime(const IntMatrix& a, int prime) {
  const std::size_t rank = rank_mod_prime(a, prime);
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(prime), a.cols() - rank);
  return out;
}

}  // namespace skewswitch::modlinalg
