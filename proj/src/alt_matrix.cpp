#include <algorithm>
#include <string>

#include "detail.hpp"
#include "skewswitch/errors.hpp"
#include "skewswitch/skewmat.hpp"

namespace skewswitch {

namespace {

void check_vertex(const AltMatrix& m, int v) {
  if (v < 0 || v >= m.size()) {
    throw OutOfRange("vertex " + std::to_string(v + 1) + " is outside [1, " +
                     std::to_string(m.size()) + "]");
  }
}

void check_same_shape(const AltMatrix& a, const AltMatrix& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) {
    throw ShapeMismatch("matrices differ in modulus or size");
  }
}

}  // namespace

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  }
  return inv;
}

bool is_permutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : sigma) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SwitchExponents

SwitchExponents::SwitchExponents(int modulus, std::vector<int> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus < 2) throw InvalidModulus("modulus must be at least 2");
  for (int& v : values_) v = modlinalg::reduce(v, modulus);
}

SwitchExponents SwitchExponents::zero(int modulus, int n) {
  return SwitchExponents(modulus, std::vector<int>(static_cast<std::size_t>(n), 0));
}

SwitchExponents SwitchExponents::unit(int modulus, int n, int v) {
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  values.at(static_cast<std::size_t>(v)) = 1;
  return SwitchExponents(modulus, std::move(values));
}

SwitchExponents SwitchExponents::normalized() const {
  if (values_.empty()) return *this;
  std::vector<int> out(values_);
  const int shift = values_.front();
  for (int& v : out) v -= shift;
  return SwitchExponents(modulus_, std::move(out));
}

// ---------------------------------------------------------------------------
// AltMatrix

AltMatrix::AltMatrix(int modulus, int size)
    : modulus_(modulus),
      size_(size),
      data_(static_cast<std::size_t>(size) * simd::kLanes, 0) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw InvalidModulus("modulus must lie in [2, " + std::to_string(kMaxModulus) + "], got " +
                         std::to_string(modulus));
  }
  if (size < 1 || size > kMaxSize) {
    throw OutOfRange("matrix size must lie in [1, " + std::to_string(kMaxSize) + "], got " +
                     std::to_string(size));
  }
}

AltMatrix AltMatrix::zero(int modulus, int size) { return AltMatrix(modulus, size); }

AltMatrix AltMatrix::make(int modulus, int size, const std::vector<std::vector<long>>& raw) {
  AltMatrix m(modulus, size);
  if (raw.size() != static_cast<std::size_t>(size)) {
    throw LengthMismatch("expected " + std::to_string(size) + " rows, got " +
                         std::to_string(raw.size()));
  }
  for (int i = 0; i < size; ++i) {
    const auto& row = raw[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(size)) {
      throw LengthMismatch("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(size));
    }
    for (int j = 0; j < size; ++j) {
      m.data_[index(i, j)] =
          static_cast<std::uint8_t>(modlinalg::reduce(row[static_cast<std::size_t>(j)], modulus));
    }
  }
  // Row-major scan; each cell is checked against its transpose once the
  // transpose has been seen, so the reported cell is the first offender.
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int a = m.at(i, j);
      if (i == j) {
        if (a != 0) {
          throw ValidationError(i + 1, j + 1,
                                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") on the diagonal must be 0 mod " + std::to_string(modulus));
        }
      } else if ((a + m.at(j, i)) % modulus != 0) {
        throw ValidationError(i + 1, j + 1,
                              "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") is not the negative of entry (" + std::to_string(j + 1) + "," +
                                  std::to_string(i + 1) + ") mod " + std::to_string(modulus));
      }
    }
  }
  return m;
}

AltMatrix AltMatrix::with_entry(int i, int j, long value) const {
  if (i < 0 || i >= size_ || j < 0 || j >= size_) throw OutOfRange("entry index out of range");
  const int v = modlinalg::reduce(value, modulus_);
  if (i == j) {
    if (v != 0) throw ValidationError(i + 1, j + 1, "diagonal entries must be 0");
    return *this;
  }
  AltMatrixBuilder b(*this);
  b.set_pair(i, j, v);
  return std::move(b).build();
}

std::vector<std::vector<int>> AltMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) {
    out[static_cast<std::size_t>(i)].assign(row_data(i), row_data(i) + size_);
  }
  return out;
}

void AltMatrix::clear_padding(int i) {
  std::fill(mutable_row(i) + size_, mutable_row(i) + simd::kLanes, std::uint8_t{0});
}

std::strong_ordering operator<=>(const AltMatrix& a, const AltMatrix& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.data_ <=> b.data_;
}

// ---------------------------------------------------------------------------
// TripleTensor

TripleTensor::TripleTensor(int modulus, int size, std::vector<std::uint8_t> values)
    : modulus_(modulus), size_(size), values_(std::move(values)) {}

int TripleTensor::at(int i, int j, int h) const {
  if (!(0 <= i && i < j && j < h && h < size_)) throw OutOfRange("triple index must satisfy i<j<h");
  // Position of (i, j, h) in lexicographic order of all 3-subsets.
  std::size_t pos = 0;
  const auto n = static_cast<std::size_t>(size_);
  auto choose2 = [](std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; };
  for (int a = 0; a < i; ++a) pos += choose2(n - 1 - static_cast<std::size_t>(a));
  for (int b = i + 1; b < j; ++b) pos += n - 1 - static_cast<std::size_t>(b);
  pos += static_cast<std::size_t>(h - j - 1);
  return values_[pos];
}

std::strong_ordering operator<=>(const TripleTensor& a, const TripleTensor& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.values_ <=> b.values_;
}

TripleTable::TripleTable(const AltMatrix& m)
    : n_(m.size()), data_(static_cast<std::size_t>(n_) * n_ * simd::kLanes, 0) {
  const auto& k = simd::active_kernels();
  const std::uint8_t l = modulus_byte(m);
  alignas(32) std::uint8_t diff[simd::kLanes];
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      // T[a][b][c] = m_ab + m_bc - m_ac
      k.sub_mod(diff, m.row_data(b), m.row_data(a), l);
      std::uint8_t* out = data_.data() + (static_cast<std::size_t>(a) * n_ + b) * simd::kLanes;
      k.add_scalar_mod(out, diff, static_cast<std::uint8_t>(m.at(a, b)), l);
      std::fill(out + n_, out + simd::kLanes, std::uint8_t{0});
    }
  }
}

// ---------------------------------------------------------------------------
// Switching and relabeling

AltMatrix switch_at(const AltMatrix& m, int v) {
  check_vertex(m, v);
  return switch_many(m, SwitchExponents::unit(m.modulus(), m.size(), v));
}

AltMatrix switch_many(const AltMatrix& m, const SwitchExponents& a) {
  if (a.size() != m.size()) {
    throw LengthMismatch("switch exponents have length " + std::to_string(a.size()) +
                         ", matrix size is " + std::to_string(m.size()));
  }
  const int l = m.modulus();
  if (a.modulus() != l) throw ShapeMismatch("switch exponents use a different modulus");

  const auto& k = simd::active_kernels();
  alignas(32) std::uint8_t lane[simd::kLanes] = {};
  for (int j = 0; j < m.size(); ++j) lane[j] = static_cast<std::uint8_t>(a[j]);

  AltMatrixBuilder b(m.modulus(), m.size());
  alignas(32) std::uint8_t tmp[simd::kLanes];
  for (int i = 0; i < m.size(); ++i) {
    // row_i + a - a_i
    k.add_mod(tmp, m.row_data(i), lane, modulus_byte(m));
    k.add_scalar_mod(b.row(i), tmp, static_cast<std::uint8_t>(a[i] == 0 ? 0 : l - a[i]),
                     modulus_byte(m));
    b.row(i)[i] = 0;
    b.clear_padding(i);
  }
  return std::move(b).build();
}

AltMatrix relabel(const AltMatrix& m, const Permutation& sigma) {
  if (!is_permutation(sigma, m.size())) throw ShapeMismatch("relabel: not a bijection on [n]");
  AltMatrixBuilder b(m.modulus(), m.size());
  for (int i = 0; i < m.size(); ++i) {
    const std::uint8_t* src = m.row_data(i);
    std::uint8_t* dst = b.row(sigma[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m.size(); ++j) dst[sigma[static_cast<std::size_t>(j)]] = src[j];
  }
  return std::move(b).build();
}

AltMatrix difference(const AltMatrix& a, const AltMatrix& b) {
  check_same_shape(a, b);
  const auto& k = simd::active_kernels();
  AltMatrixBuilder out(a.modulus(), a.size());
  for (int i = 0; i < a.size(); ++i) k.sub_mod(out.row(i), a.row_data(i), b.row_data(i), modulus_byte(a));
  return std::move(out).build();
}

TripleTensor triple_tensor(const AltMatrix& m) {
  const int n = m.size();
  const auto& k = simd::active_kernels();
  const std::uint8_t l = modulus_byte(m);
  std::vector<std::uint8_t> values;
  if (n >= 3) values.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  alignas(32) std::uint8_t diff[simd::kLanes];
  alignas(32) std::uint8_t lane[simd::kLanes];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      k.sub_mod(diff, m.row_data(j), m.row_data(i), l);
      k.add_scalar_mod(lane, diff, static_cast<std::uint8_t>(m.at(i, j)), l);
      values.insert(values.end(), lane + j + 1, lane + n);
    }
  }
  return TripleTensor(m.modulus(), n, std::move(values));
}

std::optional<SwitchExponents> potential_witness(const AltMatrix& d) {
  const int n = d.size();
  const int l = d.modulus();
  const auto& k = simd::active_kernels();
  // a_j = d_0j; then row i must equal a - a_i.
  alignas(32) std::uint8_t a[simd::kLanes] = {};
  for (int j = 0; j < n; ++j) a[j] = static_cast<std::uint8_t>(d.at(0, j));
  alignas(32) std::uint8_t expected[simd::kLanes];
  alignas(32) std::uint8_t delta[simd::kLanes];
  for (int i = 1; i < n; ++i) {
    k.add_scalar_mod(expected, a, static_cast<std::uint8_t>(a[i] == 0 ? 0 : l - a[i]),
                     modulus_byte(d));
    std::fill(expected + n, expected + simd::kLanes, std::uint8_t{0});
    k.sub_mod(delta, expected, d.row_data(i), modulus_byte(d));
    if (!k.all_zero(delta)) return std::nullopt;
  }
  return SwitchExponents(l, std::vector<int>(a, a + n));
}

AltMatrix isolate(const AltMatrix& m, int v) {
  check_vertex(m, v);
  std::vector<int> a(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) a[static_cast<std::size_t>(i)] = i == v ? 0 : -m.at(v, i);
  return switch_many(m, SwitchExponents(m.modulus(), std::move(a)));
}

bool verify_witness(const AltMatrix& m, const AltMatrix& target, const EquivWitness& w) {
  if (m.modulus() != target.modulus() || m.size() != target.size()) return false;
  if (!is_permutation(w.sigma, m.size()) || w.exponents.size() != m.size() ||
      w.exponents.modulus() != m.modulus()) {
    return false;
  }
  return relabel(switch_many(m, w.exponents), w.sigma) == target;
}

}  // namespace skewswitch
