#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewswitch/skewmat.hpp"

namespace skewswitch {

// Sorted list of 0-based vertices.
using VertexSet = std::vector<int>;

// A simplicial complex on n vertices, stored by its facets. Facets are
// sorted ascending and the facet list is sorted lexicographically.
class SimplicialComplex {
 public:
  // Normalizes the order; throws ValidationError unless the facets form an
  // antichain covering every vertex.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

  int n_;
  std::vector<VertexSet> facets_;
};

// A linear subspace P(F) of the point variety; one per facet.
struct ComponentDescriptor {
  VertexSet support;
  int projective_dimension;

  friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

// True iff every 3-subset of f has zero triple sum.
bool is_face(const AltMatrix& m, const VertexSet& f);

// The point simplicial complex of m.
SimplicialComplex facets(const AltMatrix& m);

// Same complex assembled from maximal independent sets of the isolations.
SimplicialComplex facets_via_isolations(const AltMatrix& m);

int dimension(const SimplicialComplex& delta);

// Vertex bijection mapping facets onto facets, lex-first, or nothing.
std::optional<Permutation> complexes_isomorphic(const SimplicialComplex& a,
                                                const SimplicialComplex& b);

// Largest T with m_ij = 0 for all i, j in T.
int independence_number(const AltMatrix& m);

// Adjacency bitmasks of the underlying simple graph (edge ij iff m_ij != 0).
std::vector<std::uint32_t> underlying_graph(const AltMatrix& m);

std::vector<ComponentDescriptor> variety_components(const SimplicialComplex& delta);

// Relabels vertices of a complex: facet F becomes sigma(F).
SimplicialComplex relabel(const SimplicialComplex& delta, const Permutation& sigma);

}  // namespace skewswitch
