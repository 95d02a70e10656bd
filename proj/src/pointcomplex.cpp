#include "skewswitch/pointcomplex.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "detail.hpp"
#include "skewswitch/errors.hpp"

namespace skewswitch {

namespace {

using Mask = std::uint32_t;

Mask bit(int v) { return Mask{1} << v; }

Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (bit(n) - 1); }

VertexSet to_set(Mask mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Keeps the inclusion-maximal masks, deduplicated.
std::vector<Mask> maximal_elements(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : sets) {
      if (t != s && (s & t) == s) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

SimplicialComplex complex_from_masks(int n, const std::vector<Mask>& masks) {
  std::vector<VertexSet> facets;
  facets.reserve(masks.size());
  for (Mask m : masks) facets.push_back(to_set(m));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

// Bron-Kerbosch with pivoting over a graph given by neighbour masks;
// reports every maximal clique.
template <typename Visit>
void maximal_cliques(const std::vector<Mask>& nbr, Mask r, Mask p, Mask x, Visit& visit) {
  if (p == 0 && x == 0) {
    visit(r);
    return;
  }
  const Mask px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (Mask rest = px; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int c = std::popcount(p & nbr[static_cast<std::size_t>(u)]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask cand = p & ~nbr[static_cast<std::size_t>(pivot)]; cand != 0; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    const Mask nv = nbr[static_cast<std::size_t>(v)];
    maximal_cliques(nbr, r | bit(v), p & nv, x & nv, visit);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// Complement of the underlying graph: i ~ j iff m_ij = 0, i != j.
std::vector<Mask> zero_graph(const AltMatrix& m) {
  const auto adj = underlying_graph(m);
  const Mask all = full_mask(m.size());
  std::vector<Mask> out(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) out[i] = ~adj[i] & all & ~bit(static_cast<int>(i));
  return out;
}

std::vector<Mask> maximal_independent_sets(const AltMatrix& m) {
  const auto nbr = zero_graph(m);
  std::vector<Mask> out;
  auto visit = [&](Mask r) { out.push_back(r); };
  maximal_cliques(nbr, 0, full_mask(m.size()), 0, visit);
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
  if (n < 1 || n > AltMatrix::kMaxSize) throw OutOfRange("vertex count out of range");
  Mask covered = 0;
  std::vector<Mask> masks;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw ValidationError(0, 0, "empty facet");
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw ValidationError(0, 0, "facet repeats a vertex");
    }
    if (f.front() < 0 || f.back() >= n) throw OutOfRange("facet vertex out of range");
    masks.push_back(to_mask(f));
    covered |= masks.back();
  }
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if (a != b && (masks[a] & masks[b]) == masks[a]) {
        throw ValidationError(0, 0, "facets must be pairwise incomparable");
      }
    }
  }
  if (covered != full_mask(n)) throw ValidationError(0, 0, "facets must cover every vertex");
  std::sort(facets.begin(), facets.end(), lex_less);
  return SimplicialComplex(n, std::move(facets));
}

std::vector<std::uint32_t> underlying_graph(const AltMatrix& m) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(m.size()), 0);
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (i != j && m.at(i, j) != 0) adj[static_cast<std::size_t>(i)] |= bit(j);
    }
  }
  return adj;
}

bool is_face(const AltMatrix& m, const VertexSet& f) {
  for (int v : f) {
    if (v < 0 || v >= m.size()) {
      throw OutOfRange("vertex " + std::to_string(v + 1) + " is outside [1, " +
                       std::to_string(m.size()) + "]");
    }
  }
  VertexSet s = f;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const int l = m.modulus();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      for (std::size_t c = b + 1; c < s.size(); ++c) {
        const int t = m.at(s[a], s[b]) + m.at(s[b], s[c]) + m.at(s[c], s[a]);
        if (t % l != 0) return false;
      }
    }
  }
  return true;
}

SimplicialComplex facets(const AltMatrix& m) {
  const int n = m.size();
  const TripleTable t(m);
  // zero[i][j]: vertices w with t_ijw = 0
  std::vector<Mask> zero(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mask z = 0;
      for (int w = 0; w < n; ++w) {
        if (w != i && w != j && t.at(i, j, w) == 0) z |= bit(w);
      }
      zero[static_cast<std::size_t>(i) * n + j] = z;
    }
  }

  // Extend faces by increasing vertices. `compat` is every vertex outside
  // the face that could join it; the face is maximal when that is empty.
  std::vector<Mask> found;
  auto extend = [&](auto&& self, Mask face, int last, Mask compat) -> void {
    if (compat == 0) {
      found.push_back(face);
      return;
    }
    const Mask above = last + 1 >= 32 ? 0 : compat & ~(bit(last + 1) - 1);
    for (Mask rest = above; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      Mask next = compat & ~bit(w);
      for (Mask in = face; in != 0; in &= in - 1) {
        next &= zero[static_cast<std::size_t>(std::countr_zero(in)) * n + w];
      }
      self(self, face | bit(w), w, next);
    }
  };
  extend(extend, 0, -1, full_mask(n));
  return complex_from_masks(n, found);
}

SimplicialComplex facets_via_isolations(const AltMatrix& m) {
  std::vector<Mask> all;
  for (int v = 0; v < m.size(); ++v) {
    const auto sets = maximal_independent_sets(isolate(m, v));
    all.insert(all.end(), sets.begin(), sets.end());
  }
  return complex_from_masks(m.size(), maximal_elements(std::move(all)));
}

int independence_number(const AltMatrix& m) {
  int best = 0;
  for (Mask s : maximal_independent_sets(m)) best = std::max(best, std::popcount(s));
  return best;
}

int dimension(const SimplicialComplex& delta) {
  std::size_t largest = 0;
  for (const auto& f : delta.facets()) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

SimplicialComplex relabel(const SimplicialComplex& delta, const Permutation& sigma) {
  if (!is_permutation(sigma, delta.vertex_count())) throw ShapeMismatch("not a bijection on [n]");
  std::vector<VertexSet> out;
  for (const auto& f : delta.facets()) {
    VertexSet g;
    for (int v : f) g.push_back(sigma[static_cast<std::size_t>(v)]);
    out.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(delta.vertex_count(), std::move(out));
}

std::optional<Permutation> complexes_isomorphic(const SimplicialComplex& a,
                                                const SimplicialComplex& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.facets().size() != b.facets().size()) return std::nullopt;

  std::vector<Mask> fa, fb;
  for (const auto& f : a.facets()) fa.push_back(to_mask(f));
  for (const auto& f : b.facets()) fb.push_back(to_mask(f));

  // Sorted sizes of the facets containing a vertex, and containing a pair.
  auto profiles = [n](const std::vector<Mask>& fs) {
    std::vector<std::vector<int>> vertex(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> pair(static_cast<std::size_t>(n) * n);
    for (Mask f : fs) {
      const int size = std::popcount(f);
      for (Mask r = f; r != 0; r &= r - 1) {
        const int u = std::countr_zero(r);
        vertex[static_cast<std::size_t>(u)].push_back(size);
        for (Mask s = f; s != 0; s &= s - 1) {
          pair[static_cast<std::size_t>(u) * n + std::countr_zero(s)].push_back(size);
        }
      }
    }
    for (auto& v : vertex) std::sort(v.begin(), v.end());
    for (auto& v : pair) std::sort(v.begin(), v.end());
    return std::make_pair(vertex, pair);
  };
  const auto [va, pa] = profiles(fa);
  const auto [vb, pb] = profiles(fb);
  {
    auto sa = va, sb = vb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Mask> sorted_b = fb;
  std::sort(sorted_b.begin(), sorted_b.end());
  Permutation sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto accept = [&]() {
    std::vector<Mask> mapped;
    mapped.reserve(fa.size());
    for (Mask f : fa) {
      Mask g = 0;
      for (Mask r = f; r != 0; r &= r - 1) g |= bit(sigma[static_cast<std::size_t>(std::countr_zero(r))]);
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == sorted_b;
  };
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return accept();
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      if (va[static_cast<std::size_t>(k)] != vb[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        ok = pa[static_cast<std::size_t>(i) * n + k] ==
             pb[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)]) * n + x];
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(x)] = true;
      sigma[static_cast<std::size_t>(k)] = x;
      if (self(self, k + 1)) return true;
      used[static_cast<std::size_t>(x)] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return sigma;
}

std::vector<ComponentDescriptor> variety_components(const SimplicialComplex& delta) {
  std::vector<ComponentDescriptor> out;
  for (const auto& f : delta.facets()) {
    out.push_back({f, static_cast<int>(f.size()) - 1});
  }
  return out;
}

}  // namespace skewswitch
