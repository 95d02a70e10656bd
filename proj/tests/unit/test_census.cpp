#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "skewswitch/census.hpp"
#include "skewswitch/errors.hpp"
#include "skewswitch/eulerian.hpp"
#include "skewswitch/pointcomplex.hpp"

namespace {

using namespace skewswitch;
using modlinalg::IntMatrix;

// Orbit counting by union-find over every labeled matrix, with the group
// generated by adjacent transpositions (and optionally all switchings).
// Shares nothing with the library beyond plain integers.
class OrbitOracle {
 public:
  OrbitOracle(int modulus, int n) : l_(modulus), n_(n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs_.push_back({i, j});
    total_ = 1;
    for (std::size_t k = 0; k < pairs_.size(); ++k) total_ *= l_;
  }

  long switching_classes() const { return count(true, false); }
  long eulerian_classes() const { return count(false, true); }

 private:
  std::vector<int> decode(long code) const {
    std::vector<int> m(static_cast<std::size_t>(n_ * n_), 0);
    for (auto [i, j] : pairs_) {
      const int v = static_cast<int>(code % l_);
      code /= l_;
      m[static_cast<std::size_t>(i * n_ + j)] = v;
      m[static_cast<std::size_t>(j * n_ + i)] = (l_ - v) % l_;
    }
    return m;
  }
  long encode(const std::vector<int>& m) const {
    long code = 0;
    for (auto it = pairs_.rbegin(); it != pairs_.rend(); ++it)
      code = code * l_ + m[static_cast<std::size_t>(it->first * n_ + it->second)];
    return code;
  }
  bool eulerian(const std::vector<int>& m) const {
    for (int i = 0; i < n_; ++i) {
      int s = 0;
      for (int j = 0; j < n_; ++j) s += m[static_cast<std::size_t>(i * n_ + j)];
      if (s % l_) return false;
    }
    return true;
  }
  long find(std::vector<long>& parent, long x) const {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  long count(bool with_switching, bool only_eulerian) const {
    std::vector<long> parent(static_cast<std::size_t>(total_));
    std::iota(parent.begin(), parent.end(), 0L);
    auto unite = [&](long a, long b) { parent[static_cast<std::size_t>(find(parent, a))] = find(parent, b); };
    for (long code = 0; code < total_; ++code) {
      const auto m = decode(code);
      for (int t = 0; t + 1 < n_; ++t) {
        std::vector<int> r(m.size());
        auto sw = [&](int x) { return x == t ? t + 1 : x == t + 1 ? t : x; };
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(sw(i) * n_ + sw(j))] = m[static_cast<std::size_t>(i * n_ + j)];
        unite(code, encode(r));
      }
      if (with_switching) {
        for (int v = 0; v < n_; ++v) {
          std::vector<int> r = m;
          for (int j = 0; j < n_; ++j) {
            if (j == v) continue;
            auto& a = r[static_cast<std::size_t>(v * n_ + j)];
            a = (a + l_ - 1) % l_;
            auto& b = r[static_cast<std::size_t>(j * n_ + v)];
            b = (b + 1) % l_;
          }
          unite(code, encode(r));
        }
      }
    }
    std::set<long> roots;
    for (long code = 0; code < total_; ++code)
      if (!only_eulerian || eulerian(decode(code))) roots.insert(find(const_cast<std::vector<long>&>(parent), code));
    return static_cast<long>(roots.size());
  }

  int l_, n_;
  long total_;
  std::vector<std::pair<int, int>> pairs_;
};

TEST(CycleTypes, ClassSizesSumToFactorial) {
  for (int n = 1; n <= 11; ++n) {
    BigInt sum = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const auto types = cycle_types(n);
    for (const auto& t : types) {
      EXPECT_EQ(std::accumulate(t.parts.begin(), t.parts.end(), 0), n);
      EXPECT_TRUE(std::is_sorted(t.parts.rbegin(), t.parts.rend()));
      sum += t.class_size;
    }
    EXPECT_EQ(sum, fact) << n;
  }
  EXPECT_EQ(cycle_types(11).size(), 56u);
  EXPECT_EQ(cycle_types(4).front().parts, (std::vector<int>{4}));
  EXPECT_EQ(cycle_types(4).back().parts, (std::vector<int>{1, 1, 1, 1}));
}

TEST(CycleTypes, RepresentativeHasThatType) {
  for (const auto& t : cycle_types(6)) {
    const auto p = t.representative();
    std::vector<int> lengths;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = true, ++len;
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    EXPECT_EQ(lengths, t.parts);
  }
}

TEST(FixedPointSystem, SwitchingColumnsAreSwitchMatrices) {
  const int n = 5, l = 7;
  const auto sys = FixedPointSystem::build(identity_permutation(n));
  for (int v = 0; v < n; ++v) {
    const auto x = switch_at(AltMatrix::zero(l, n), v);
    std::size_t e = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++e)
        EXPECT_EQ(modlinalg::reduce(sys.switching.at(e, static_cast<std::size_t>(v)).get_si(), l), x.at(i, j));
  }
}

TEST(FixedPointSystem, BoundaryIsEquivariant) {
  // phi(sigma . e) = P_sigma phi(e) for every basis edge.
  for (const auto& t : cycle_types(5)) {
    const auto sigma = t.representative();
    const auto sys = FixedPointSystem::build(sigma);
    const std::size_t n = sigma.size(), edges = sys.action.rows();
    for (std::size_t e = 0; e < edges; ++e) {
      std::vector<BigInt> lhs(n, 0), rhs(n, 0);
      for (std::size_t f = 0; f < edges; ++f)
        for (std::size_t v = 0; v < n; ++v) lhs[v] += sys.boundary.at(v, f) * sys.action.at(f, e);
      for (std::size_t v = 0; v < n; ++v) rhs[static_cast<std::size_t>(sigma[v])] += sys.boundary.at(v, e);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Burnside, IdentityTermsPinBothSystems) {
  for (int l : {2, 3, 4, 6}) {
    for (int n = 1; n <= 6; ++n) {
      const auto id = identity_permutation(n);
      BigInt ker_phi, total, kernel_psi;
      mpz_ui_pow_ui(ker_phi.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>((n - 1) * (n - 2) / 2));
      EXPECT_EQ(fixed_eulerian_count(l, id), ker_phi) << l << "," << n;
      // Im psi has l^(n-1) elements: the kernel is the constant vectors.
      mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(n * (n - 1) / 2 - (n - 1)));
      EXPECT_EQ(fixed_class_count(l, id), total) << l << "," << n;
    }
  }
}

TEST(Burnside, PrimeFastPathAgreesWithSmith) {
  const CensusOptions smith{LinearSolver::kSmith, 1};
  for (int l : {2, 3, 5, 7}) {
    for (int n = 1; n <= 7; ++n) {
      EXPECT_EQ(count_switching_classes(l, n), count_switching_classes(l, n, smith)) << l << "," << n;
      EXPECT_EQ(count_eulerian_classes(l, n), count_eulerian_classes(l, n, smith)) << l << "," << n;
    }
  }
}

TEST(Burnside, WorkerCountDoesNotChangeResults) {
  for (unsigned w : {1u, 2u, 5u}) {
    EXPECT_EQ(count_switching_classes(3, 9, {LinearSolver::kAuto, w}), BigInt(64154817));
    EXPECT_EQ(count_eulerian_classes(4, 6, {LinearSolver::kAuto, w}), BigInt(1760));
  }
}

TEST(Burnside, PublishedTables) {
  const std::vector<long> s2 = {1, 1, 2, 3, 7, 16, 54, 243, 2038, 33120, 1182004};
  const std::vector<const char*> s3 = {"1", "1", "2", "4", "14", "120", "3222", "271287", "64154817", "41653775052", "74220906305025"};
  const std::vector<long> t4 = {1, 1, 3, 8, 62, 1760};
  for (int n = 1; n <= 11; ++n) {
    EXPECT_EQ(count_switching_classes(2, n), BigInt(s2[static_cast<std::size_t>(n - 1)])) << n;
    EXPECT_EQ(count_switching_classes(3, n), BigInt(s3[static_cast<std::size_t>(n - 1)])) << n;
  }
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_eulerian_classes(4, n), BigInt(t4[static_cast<std::size_t>(n - 1)])) << n;
}

TEST(Burnside, PrimeOrCoprimeGivesEqualCounts) {
  for (int l = 2; l <= 8; ++l) {
    for (int n = 1; n <= 8; ++n) {
      if (!modlinalg::is_prime(l) && std::gcd(l, n) != 1) continue;
      EXPECT_EQ(count_switching_classes(l, n), count_eulerian_classes(l, n)) << l << "," << n;
    }
  }
}

TEST(Burnside, FourModulusSmallSizesAgree) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_switching_classes(4, n), count_eulerian_classes(4, n)) << n;
}

TEST(Burnside, RejectsBadArguments) {
  EXPECT_THROW(count_switching_classes(1, 3), InvalidModulus);
  EXPECT_THROW(count_eulerian_classes(3, 0), OutOfRange);
}

TEST(Oracle, UnionFindMatchesBurnside) {
  const std::vector<std::pair<int, int>> cases = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}, {4, 4}, {5, 3}, {6, 3}, {6, 4}};
  for (auto [l, n] : cases) {
    const OrbitOracle oracle(l, n);
    EXPECT_EQ(count_switching_classes(l, n), BigInt(oracle.switching_classes())) << l << "," << n;
    EXPECT_EQ(count_eulerian_classes(l, n), BigInt(oracle.eulerian_classes())) << l << "," << n;
  }
}

TEST(Oracle, BruteForceCensusSmall) {
  const auto r = brute_force_census(3, 4);
  EXPECT_EQ(r.s, 4);
  EXPECT_EQ(r.t, 4);
  ASSERT_TRUE(r.representatives.has_value());
  EXPECT_EQ(r.representatives->size(), 4u);
  EXPECT_EQ(brute_force_census(2, 5).s, 7);
  const auto r3 = brute_force_census(3, 3);
  EXPECT_EQ(r3.s, 2);
  EXPECT_EQ(r3.t, 2);
  EXPECT_THROW(brute_force_census(3, 9), GuardExceeded);
}

TEST(Representatives, CountsAndShape) {
  for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 4}}) {
    const auto reps = enumerate_eulerian_representatives(l, n);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(reps.size())), count_eulerian_classes(l, n)) << l << "," << n;
    EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
    for (std::size_t a = 0; a < reps.size(); ++a) {
      EXPECT_TRUE(is_modular_eulerian(reps[a]));
      EXPECT_EQ(canonical_iso_form(reps[a]), reps[a]);
      if (a > 0) EXPECT_NE(reps[a - 1], reps[a]);
    }
  }
  const auto one = enumerate_eulerian_representatives(3, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), AltMatrix::zero(3, 1));
  EXPECT_EQ(enumerate_eulerian_representatives(2, 4).size(), 3u);
}

TEST(Representatives, MatchBruteForce) {
  const auto brute = brute_force_census(3, 4);
  EXPECT_EQ(*brute.representatives, enumerate_eulerian_representatives(3, 4));
}

TEST(Representatives, FiveVertexComplexesMatchClassification) {
  const auto reps = enumerate_eulerian_representatives(3, 5);
  ASSERT_EQ(reps.size(), 14u);
  const auto& listed = fixtures::eulerian_digraphs(5);
  std::vector<bool> used(listed.size(), false);
  for (const auto& m : reps) {
    const auto delta = facets(m);
    int matches = 0;
    for (std::size_t k = 0; k < listed.size(); ++k) {
      if (complexes_isomorphic(delta, fixtures::complex_of(5, listed[k].facets))) {
        ++matches;
        EXPECT_FALSE(used[k]);
        used[k] = true;
      }
    }
    EXPECT_EQ(matches, 1);
  }
}

// With 3 | n the Eulerian classes are not switching classes: on three
// vertices both Eulerian classes lie in the class of the zero matrix.
TEST(Representatives, ThreeVerticesAreNotClassRepresentatives) {
  const auto reps = enumerate_eulerian_representatives(3, 3);
  ASSERT_EQ(reps.size(), 2u);
  for (const auto& m : reps) {
    EXPECT_TRUE(switching_equivalent(m, AltMatrix::zero(3, 3)).has_value());
    EXPECT_EQ(facets(m), fixtures::complex_of(3, {"123"}));
  }
  EXPECT_EQ(count_switching_classes(3, 3), 2);
  EXPECT_EQ(facets(fixtures::digraph(3, {{1, 2}})), fixtures::complex_of(3, {"12", "13", "23"}));
}

TEST(Representatives, FourVertexComplexesMatchClassification) {
  const auto reps = enumerate_eulerian_representatives(3, 4);
  ASSERT_EQ(reps.size(), 4u);
  for (const auto& d : fixtures::eulerian_digraphs(4)) {
    int matches = 0;
    for (const auto& m : reps) matches += complexes_isomorphic(facets(m), fixtures::complex_of(4, d.facets)).has_value();
    EXPECT_EQ(matches, 1) << d.label;
  }
}

}  // namespace
