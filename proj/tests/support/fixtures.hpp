#pragma once

// Worked examples shared by the unit and acceptance tests. Vertices here
// are 1-based, as drawn; the helpers convert to the 0-based API.

#include <string>
#include <utility>
#include <vector>

#include "skewswitch/pointcomplex.hpp"
#include "skewswitch/skewmat.hpp"

namespace fixtures {

using Arc = std::pair<int, int>;

struct ClassifiedDigraph {
  std::vector<Arc> arcs;
  // Facets written as digit strings, e.g. "124".
  std::vector<std::string> facets;
  std::string label;
};

// An l = 3 digraph: i -> j means m_ij = 1.
inline skewswitch::AltMatrix digraph(int n, const std::vector<Arc>& arcs, int modulus = 3) {
  std::vector<std::vector<long>> raw(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  for (auto [a, b] : arcs) {
    raw[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
    raw[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
  }
  return skewswitch::AltMatrix::make(modulus, n, raw);
}

inline skewswitch::VertexSet face(const std::string& digits) {
  skewswitch::VertexSet out;
  for (char c : digits) out.push_back(c - '1');
  return out;
}

inline skewswitch::SimplicialComplex complex_of(int n, const std::vector<std::string>& facets) {
  std::vector<skewswitch::VertexSet> fs;
  for (const auto& f : facets) fs.push_back(face(f));
  return skewswitch::SimplicialComplex::from_facets(n, std::move(fs));
}

// Every modular Eulerian digraph on three, four and five vertices up to
// isomorphism, with its point complex.
inline const std::vector<ClassifiedDigraph>& eulerian_digraphs(int n) {
  static const std::vector<ClassifiedDigraph> three = {
      {{}, {"123"}, "(1)"},
      {{{1, 2}}, {"12", "13", "23"}, "(2)"},
  };
  static const std::vector<ClassifiedDigraph> four = {
      {{}, {"1234"}, "0"},
      {{{1, 2}, {2, 3}, {3, 1}}, {"123", "14", "24", "34"}, "2"},
      {{{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {"12", "13", "14", "23", "24", "34"}, "3"},
      {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 3}}, {"124", "234", "13"}, "1"},
  };
  static const std::vector<ClassifiedDigraph> five = {
      {{}, {"12345"}, "0"},
      {{{1, 2}, {2, 3}, {3, 1}}, {"123", "145", "245", "345"}, "2a"},
      {{{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {"135", "245", "12", "14", "23", "34"}, "4b"},
      {{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}},
       {"12", "13", "14", "15", "23", "24", "25", "34", "35", "45"},
       "6"},
      {{{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}},
       {"123", "124", "135", "145", "25", "34"},
       "2b"},
      {{{2, 1}, {2, 5}, {1, 5}, {3, 2}, {5, 3}, {4, 2}, {5, 4}}, {"2345", "134", "12", "15"}, "2c"},
      {{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}},
       {"124", "134", "135", "235", "245"},
       "1b"},
      {{{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 3}}, {"124", "234", "245", "13", "15", "35"}, "3c"},
      {{{2, 1}, {1, 5}, {2, 5}, {2, 3}, {3, 4}, {4, 5}}, {"123", "145", "235", "245", "34"}, "2d"},
      {{{2, 1}, {2, 3}, {2, 4}, {1, 5}, {3, 5}, {4, 5}}, {"1234", "1345", "25"}, "1c"},
      {{{2, 1}, {3, 2}, {3, 1}, {1, 5}, {5, 4}, {1, 4}, {3, 4}},
       {"234", "345", "12", "13", "14", "15", "25"},
       "4a"},
      {{{1, 3}, {1, 5}, {2, 1}, {2, 5}, {2, 3}, {4, 5}, {4, 1}, {4, 3}}, {"2345", "124", "135"}, "1a"},
      {{{1, 2}, {2, 4}, {2, 5}, {3, 2}, {3, 4}, {3, 5}, {5, 1}, {5, 4}},
       {"123", "125", "145", "24", "34", "35"},
       "3a"},
      {{{1, 3}, {1, 5}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 1}},
       {"134", "12", "15", "23", "24", "25", "35", "45"},
       "5"},
  };
  static const std::vector<ClassifiedDigraph> none;
  switch (n) {
    case 3: return three;
    case 4: return four;
    case 5: return five;
    default: return none;
  }
}

// Two pairs of l = 3 digraphs whose point complexes coincide although the
// digraphs are not switching equivalent.
inline const std::vector<Arc>& pair6_a() {
  static const std::vector<Arc> arcs = {{2, 1}, {3, 1}};
  return arcs;
}
inline const std::vector<Arc>& pair6_b() {
  static const std::vector<Arc> arcs = {{1, 2}, {1, 3}};
  return arcs;
}
inline const std::vector<std::string>& pair6_facets() {
  static const std::vector<std::string> f = {"23456", "1456", "123"};
  return f;
}
inline const std::vector<Arc>& pair7_a() {
  static const std::vector<Arc> arcs = {{2, 1}, {3, 1}, {3, 2}, {3, 4}, {4, 1}, {5, 6}, {5, 3},
                                        {5, 1}, {6, 1}, {6, 3}, {7, 6}, {7, 3}, {7, 1}};
  return arcs;
}
inline const std::vector<Arc>& pair7_b() {
  static const std::vector<Arc> arcs = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 3}, {5, 2}, {5, 4},
                                        {5, 6}, {6, 2}, {6, 4}, {7, 4}, {7, 6}, {7, 2}};
  return arcs;
}
inline const std::vector<std::string>& pair7_facets() {
  static const std::vector<std::string> f = {"12457", "1246", "234", "357", "567", "13", "36"};
  return f;
}

// A seven-vertex matrix over Z/4Z and the modular Eulerian matrix its row
// sums lead to.
inline skewswitch::AltMatrix z4_input() {
  return skewswitch::AltMatrix::make(4, 7,
                                     {{0, 1, 1, 1, 2, 2, 3},
                                      {3, 0, 1, 1, 1, 2, 2},
                                      {3, 3, 0, 1, 1, 1, 2},
                                      {3, 3, 3, 0, 1, 1, 1},
                                      {2, 3, 3, 3, 0, 1, 1},
                                      {2, 2, 3, 3, 3, 0, 1},
                                      {1, 2, 2, 3, 3, 3, 0}});
}
inline skewswitch::AltMatrix z4_eulerian() {
  return skewswitch::AltMatrix::make(4, 7,
                                     {{0, 1, 0, 3, 3, 2, 3},
                                      {3, 0, 0, 3, 2, 2, 2},
                                      {0, 0, 0, 0, 3, 2, 3},
                                      {1, 1, 0, 0, 0, 3, 3},
                                      {1, 2, 1, 0, 0, 0, 0},
                                      {2, 2, 2, 1, 0, 0, 1},
                                      {1, 2, 1, 1, 0, 3, 0}});
}

}  // namespace fixtures
