#include "skewswitch/census.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "detail.hpp"
#include "skewswitch/errors.hpp"
#include "skewswitch/eulerian.hpp"

namespace skewswitch {

namespace {

using modlinalg::IntMatrix;

void check_arguments(int modulus, int n) {
  if (modulus < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(modulus));
  if (n < 1) throw OutOfRange("n must be at least 1, got " + std::to_string(n));
}

std::size_t edge_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

// Lexicographic position of e_ij, i < j.
std::size_t edge_index(int n, int i, int j) {
  std::size_t pos = 0;
  for (int a = 0; a < i; ++a) pos += static_cast<std::size_t>(n - 1 - a);
  return pos + static_cast<std::size_t>(j - i - 1);
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt power(int base, std::size_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

BigInt count_solutions(const IntMatrix& a, int modulus, const CensusOptions& options) {
  if (options.solver == LinearSolver::kAuto && modlinalg::is_prime(modulus)) {
    return modlinalg::count_solutions_mod_prime(a, modulus);
  }
  return modlinalg::count_solutions_mod(a, modulus);
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error(std::string("non-integral quotient in ") + what + ": " + num.get_str() +
                           " / " + den.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// (1/n!) * sum over cycle types of |class| * fixed(representative).
template <typename Fixed>
BigInt burnside(int n, const CensusOptions& options, Fixed&& fixed) {
  const auto types = cycle_types(n);
  std::vector<BigInt> terms(types.size());
  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(types.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t k = next++; k < types.size(); k = next++) {
      terms[k] = types[k].class_size * fixed(types[k].representative());
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  BigInt total(0);
  for (const auto& t : terms) total += t;
  return exact_quotient(total, factorial(n), "Burnside average");
}

}  // namespace

Permutation CycleType::representative() const {
  int n = 0;
  for (int p : parts) n += p;
  Permutation sigma(static_cast<std::size_t>(n));
  int base = 0;
  for (int len : parts) {
    for (int t = 0; t < len; ++t) sigma[static_cast<std::size_t>(base + t)] = base + (t + 1) % len;
    base += len;
  }
  return sigma;
}

std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  const BigInt n_fact = factorial(n);
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      // z = prod k^{m_k} m_k!
      BigInt z(1);
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto mult = static_cast<int>(j - i);
        z *= power(parts[i], static_cast<std::size_t>(mult)) * factorial(mult);
        i = j;
      }
      out.push_back({parts, exact_quotient(n_fact, z, "class size")});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

FixedPointSystem FixedPointSystem::build(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (!is_permutation(sigma, n)) throw ShapeMismatch("not a permutation");
  const std::size_t edges = edge_count(n);
  FixedPointSystem sys{IntMatrix(static_cast<std::size_t>(n), edges),
                       IntMatrix(edges, static_cast<std::size_t>(n)), IntMatrix(edges, edges)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::size_t e = edge_index(n, i, j);
      sys.boundary.at(static_cast<std::size_t>(j), e) = 1;
      sys.boundary.at(static_cast<std::size_t>(i), e) = -1;
      // X_j has +1 at (i, j); X_i has -1 at (i, j).
      sys.switching.at(e, static_cast<std::size_t>(j)) = 1;
      sys.switching.at(e, static_cast<std::size_t>(i)) = -1;
      const int a = sigma[static_cast<std::size_t>(i)];
      const int b = sigma[static_cast<std::size_t>(j)];
      if (a < b) {
        sys.action.at(edge_index(n, a, b), e) = 1;
      } else {
        sys.action.at(edge_index(n, b, a), e) = -1;
      }
    }
  }
  return sys;
}

BigInt fixed_eulerian_count(int modulus, const Permutation& sigma, const CensusOptions& options) {
  const auto sys = FixedPointSystem::build(sigma);
  const IntMatrix moved = sys.action - IntMatrix::identity(sys.action.rows());
  return count_solutions(moved.vstack(sys.boundary), modulus, options);
}

BigInt fixed_class_count(int modulus, const Permutation& sigma, const CensusOptions& options) {
  const auto sys = FixedPointSystem::build(sigma);
  const IntMatrix moved = sys.action - IntMatrix::identity(sys.action.rows());
  // Pairs (x, y) with (sigma - I) x = psi y.
  const BigInt pairs = count_solutions(moved.hstack(-sys.switching), modulus, options);
  const BigInt kernel = count_solutions(sys.switching, modulus, options);
  const BigInt image = exact_quotient(power(modulus, sigma.size()), kernel, "|Im psi|");
  const BigInt lifts = exact_quotient(pairs, kernel, "fixed coset lifts");
  return exact_quotient(lifts, image, "fixed cosets");
}

BigInt count_eulerian_classes(int modulus, int n, const CensusOptions& options) {
  check_arguments(modulus, n);
  return burnside(n, options, [&](const Permutation& sigma) {
    return fixed_eulerian_count(modulus, sigma, options);
  });
}

BigInt count_switching_classes(int modulus, int n, const CensusOptions& options) {
  check_arguments(modulus, n);
  return burnside(n, options, [&](const Permutation& sigma) {
    return fixed_class_count(modulus, sigma, options);
  });
}

namespace {

std::uint64_t guarded_power(int modulus, std::size_t exp, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    total *= static_cast<std::uint64_t>(modulus);
    if (total > guard) {
      throw GuardExceeded(std::to_string(modulus) + "^" + std::to_string(exp) +
                          " matrices exceed the enumeration guard of " + std::to_string(guard));
    }
  }
  return total;
}

// Calls visit(AltMatrix) for every skew-symmetric matrix of the given
// size whose strictly-upper entries restricted to the first `free_size`
// vertices range over all values; `complete` fills in the rest.
template <typename Complete, typename Visit>
void enumerate(int modulus, int size, int free_size, Complete&& complete, Visit&& visit) {
  const std::size_t free_edges = edge_count(free_size);
  std::vector<int> digits(free_edges, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < free_size; ++i)
    for (int j = i + 1; j < free_size; ++j) pairs.emplace_back(i, j);

  while (true) {
    AltMatrixBuilder b(modulus, size);
    for (std::size_t k = 0; k < free_edges; ++k) b.set_pair(pairs[k].first, pairs[k].second, digits[k]);
    complete(b);
    visit(std::move(b).build());
    std::size_t k = free_edges;
    while (k > 0) {
      if (++digits[k - 1] < modulus) break;
      digits[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
}

}  // namespace

CensusResult brute_force_census(int modulus, int n) {
  check_arguments(modulus, n);
  guarded_power(modulus, edge_count(n), kCensusGuard);

  std::set<TripleTensor> classes;
  std::set<AltMatrix> eulerian;
  enumerate(
      modulus, n, n, [](AltMatrixBuilder&) {},
      [&](const AltMatrix& m) {
        classes.insert(canonical_class_form(m));
        if (is_modular_eulerian(m)) eulerian.insert(canonical_iso_form(m));
      });

  CensusResult result;
  result.modulus = modulus;
  result.n = n;
  result.s = BigInt(static_cast<unsigned long>(classes.size()));
  result.t = BigInt(static_cast<unsigned long>(eulerian.size()));
  result.representatives.emplace(eulerian.begin(), eulerian.end());
  return result;
}

std::vector<AltMatrix> enumerate_eulerian_representatives(int modulus, int n) {
  check_arguments(modulus, n);
  if (n == 1) return {AltMatrix::zero(modulus, 1)};
  guarded_power(modulus, edge_count(n - 1), kCensusGuard);

  // A modular Eulerian matrix is determined by its restriction to the
  // first n-1 vertices: m_{i,n-1} = -sum_{j<n-1} m_ij, and the last row
  // then sums to zero automatically.
  const int last = n - 1;
  auto complete = [&](AltMatrixBuilder& b) {
    for (int i = 0; i < last; ++i) {
      int sum = 0;
      for (int j = 0; j < last; ++j) sum += b.row(i)[j];
      b.set_pair(i, last, (modulus - sum % modulus) % modulus);
    }
  };
  std::set<AltMatrix> reps;
  enumerate(modulus, n, last, complete,
            [&](const AltMatrix& m) { reps.insert(canonical_iso_form(m)); });
  return {reps.begin(), reps.end()};
}

}  // namespace skewswitch
