#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewswitch/modlinalg.hpp"
#include "skewswitch/skewmat.hpp"

namespace skewswitch {

using modlinalg::BigInt;

// A conjugacy class of S_n: the cycle lengths (descending) and the number
// of permutations with that cycle type, n! / z_lambda.
struct CycleType {
  std::vector<int> parts;
  BigInt class_size;

  // A permutation of this type whose cycles act on consecutive vertices.
  Permutation representative() const;
};

// All cycle types of S_n, parts in descending order, partitions in
// descending lexicographic order.
std::vector<CycleType> cycle_types(int n);

// Integer matrices behind the Burnside fixed-point counts for one sigma.
// Edges e_ij (i < j) are indexed in lexicographic order.
struct FixedPointSystem {
  // n x E, phi(e_ij) = v_j - v_i
  modlinalg::IntMatrix boundary;
  // E x n, column i is the switching matrix X_i read on the edge basis
  modlinalg::IntMatrix switching;
  // E x E, e_ij -> +e_{s(i)s(j)} or -e_{s(j)s(i)}
  modlinalg::IntMatrix action;

  static FixedPointSystem build(const Permutation& sigma);
};

enum class LinearSolver {
  // Prime fields use rank over F_p, everything else the Smith form.
  kAuto,
  kSmith,
};

struct CensusOptions {
  LinearSolver solver = LinearSolver::kAuto;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// |{x in Ker phi : sigma x = x}| mod l.
BigInt fixed_eulerian_count(int modulus, const Permutation& sigma,
                            const CensusOptions& options = {});

// |(V_1^* / Im psi)^sigma|, the switching classes of labeled matrices
// fixed by sigma.
BigInt fixed_class_count(int modulus, const Permutation& sigma, const CensusOptions& options = {});

// t_{l,n}: isomorphism classes of modular Eulerian matrices.
BigInt count_eulerian_classes(int modulus, int n, const CensusOptions& options = {});

// s_{l,n}: switching classes.
BigInt count_switching_classes(int modulus, int n, const CensusOptions& options = {});

struct CensusResult {
  int modulus = 0;
  int n = 0;
  BigInt s;
  BigInt t;
  // Canonical isomorphism forms of the modular Eulerian classes, sorted.
  std::optional<std::vector<AltMatrix>> representatives;
};

inline constexpr std::uint64_t kCensusGuard = 100'000'000;

// Exhaustive oracle: enumerates all l^C(n,2) matrices. Throws
// GuardExceeded past kCensusGuard.
CensusResult brute_force_census(int modulus, int n);

// One canonical_iso_form per isomorphism class of modular Eulerian
// matrices, sorted. Enumerates the l^C(n-1,2) Eulerian matrices directly.
std::vector<AltMatrix> enumerate_eulerian_representatives(int modulus, int n);

}  // namespace skewswitch
