// Permutation searches over vertex labelings. Every search walks sigma in
// lexicographic order of its image vector, so the first hit is the
// lex-first witness; pruning only discards labelings that cannot succeed.

#include <algorithm>
#include <array>
#include <vector>

#include "detail.hpp"
#include "skewswitch/errors.hpp"
#include "skewswitch/skewmat.hpp"

namespace skewswitch {

namespace {

void check_comparable(const AltMatrix& a, const AltMatrix& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) {
    throw ShapeMismatch("matrices differ in modulus or size");
  }
}

using Histogram = std::vector<int>;

// Multiset of oriented triple sums T[v][j][h] over ordered pairs (j, h);
// preserved by relabeling and by switching.
std::vector<Histogram> triple_profiles(const TripleTable& t, int modulus) {
  const int n = t.size();
  std::vector<Histogram> out(static_cast<std::size_t>(n), Histogram(static_cast<std::size_t>(modulus), 0));
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < n; ++j) {
      if (j == v) continue;
      for (int h = 0; h < n; ++h) {
        if (h == v || h == j) continue;
        ++out[static_cast<std::size_t>(v)][static_cast<std::size_t>(t.at(v, j, h))];
      }
    }
  }
  return out;
}

std::vector<Histogram> row_profiles(const AltMatrix& m) {
  const int n = m.size();
  std::vector<Histogram> out(static_cast<std::size_t>(n),
                             Histogram(static_cast<std::size_t>(m.modulus()), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ++out[static_cast<std::size_t>(i)][static_cast<std::size_t>(m.at(i, j))];
  }
  return out;
}

// Depth-first search for sigma, assigning sigma(0), sigma(1), ... in order.
// `consistent(k, x, sigma)` checks that mapping k to x agrees with the
// already-assigned prefix sigma[0..k-1]; `accept(sigma)` is the final
// verification on a complete assignment.
template <typename Consistent, typename Accept>
bool search_labelings(int n, const std::vector<Histogram>& source,
                      const std::vector<Histogram>& target, Consistent&& consistent,
                      Accept&& accept, Permutation& sigma) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  sigma.assign(static_cast<std::size_t>(n), -1);

  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return accept(sigma);
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      if (source[static_cast<std::size_t>(k)] != target[static_cast<std::size_t>(x)]) continue;
      if (!consistent(k, x, sigma)) continue;
      used[static_cast<std::size_t>(x)] = true;
      sigma[static_cast<std::size_t>(k)] = x;
      if (self(self, k + 1)) return true;
      used[static_cast<std::size_t>(x)] = false;
      sigma[static_cast<std::size_t>(k)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::optional<EquivWitness> switching_equivalent(const AltMatrix& m, const AltMatrix& target) {
  check_comparable(m, target);
  const int n = m.size();
  const TripleTable t(m);
  const TripleTable t2(target);
  const auto source = triple_profiles(t, m.modulus());
  const auto dest = triple_profiles(t2, m.modulus());

  std::optional<EquivWitness> found;
  auto consistent = [&](int k, int x, const Permutation& sigma) {
    for (int i = 0; i < k; ++i) {
      const int si = sigma[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        if (t2.at(si, sigma[static_cast<std::size_t>(j)], x) != t.at(i, j, k)) return false;
      }
    }
    return true;
  };
  auto accept = [&](const Permutation& sigma) {
    const AltMatrix d = difference(relabel(target, inverse(sigma)), m);
    auto a = potential_witness(d);
    if (!a) return false;
    found = EquivWitness{sigma, *a};
    return true;
  };
  Permutation sigma;
  search_labelings(n, source, dest, consistent, accept, sigma);
  return found;
}

std::optional<Permutation> isomorphic(const AltMatrix& m, const AltMatrix& target) {
  check_comparable(m, target);
  const int n = m.size();
  auto consistent = [&](int k, int x, const Permutation& sigma) {
    for (int i = 0; i < k; ++i) {
      if (target.at(sigma[static_cast<std::size_t>(i)], x) != m.at(i, k)) return false;
    }
    return true;
  };
  auto accept = [](const Permutation&) { return true; };
  Permutation sigma;
  if (!search_labelings(n, row_profiles(m), row_profiles(target), consistent, accept, sigma)) {
    return std::nullopt;
  }
  return sigma;
}

TripleTensor canonical_class_form(const AltMatrix& m) {
  const int n = m.size();
  if (n < 3) return triple_tensor(m);

  const TripleTable t(m);
  struct Triple {
    int i, j, h;
  };
  std::vector<Triple> triples;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int h = j + 1; h < n; ++h) triples.push_back({i, j, h});

  // tau = sigma^{-1}: the relabeled tensor reads T[tau i][tau j][tau h].
  std::vector<int> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint8_t> best(triples.size());
  for (std::size_t p = 0; p < triples.size(); ++p) {
    best[p] = static_cast<std::uint8_t>(t.at(triples[p].i, triples[p].j, triples[p].h));
  }
  while (std::next_permutation(tau.begin(), tau.end())) {
    for (std::size_t p = 0; p < triples.size(); ++p) {
      const auto& q = triples[p];
      const int v = t.at(tau[static_cast<std::size_t>(q.i)], tau[static_cast<std::size_t>(q.j)],
                         tau[static_cast<std::size_t>(q.h)]);
      if (v > best[p]) break;
      if (v < best[p]) {
        for (std::size_t r = p; r < triples.size(); ++r) {
          const auto& u = triples[r];
          best[r] = static_cast<std::uint8_t>(t.at(tau[static_cast<std::size_t>(u.i)],
                                                   tau[static_cast<std::size_t>(u.j)],
                                                   tau[static_cast<std::size_t>(u.h)]));
        }
        break;
      }
    }
  }
  return TripleTensor(m.modulus(), n, std::move(best));
}

AltMatrix canonical_iso_form(const AltMatrix& m) {
  const int n = m.size();
  std::vector<int> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = i;
  std::vector<int> best_tau = tau;

  // Compare the tau-relabeling against the best one without materializing
  // it: entry (i, j) of the relabeled matrix is m[tau i][tau j].
  auto less_than_best = [&]() {
    for (int i = 0; i < n; ++i) {
      const int ti = tau[static_cast<std::size_t>(i)];
      const int bi = best_tau[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const int a = m.at(ti, tau[static_cast<std::size_t>(j)]);
        const int b = m.at(bi, best_tau[static_cast<std::size_t>(j)]);
        if (a != b) return a < b;
      }
    }
    return false;
  };
  while (std::next_permutation(tau.begin(), tau.end())) {
    if (less_than_best()) best_tau = tau;
  }
  return relabel(m, inverse(best_tau));
}

}  // namespace skewswitch
