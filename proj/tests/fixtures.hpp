#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcg/simplicial.hpp"

namespace fixtures {

using tcg::Simplex;
using tcg::SimplicialComplex;

inline SimplicialComplex make(int m, std::vector<Simplex> facets) {
  return SimplicialComplex::fromFacets(m, std::move(facets));
}

inline SimplicialComplex point() { return make(1, {{1}}); }
inline SimplicialComplex twoPoints() { return make(2, {{1}, {2}}); }
inline SimplicialComplex fullSimplex(int m) {
  Simplex all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  return make(m, {all});
}

/// Boundary of the (m-1)-simplex on m vertices.
inline SimplicialComplex boundarySimplex(int m) {
  std::vector<Simplex> facets;
  for (int skip = 1; skip <= m; ++skip) {
    Simplex f;
    for (int v = 1; v <= m; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(f);
  }
  return make(m, facets);
}

inline SimplicialComplex boundaryTriangle() { return boundarySimplex(3); }

inline SimplicialComplex cycle(int n) {
  std::vector<Simplex> facets;
  for (int v = 1; v < n; ++v) facets.push_back({v, v + 1});
  facets.push_back({1, n});
  return make(n, facets);
}

inline SimplicialComplex fourCycle() { return cycle(4); }

inline SimplicialComplex pathGraph(int n) {
  std::vector<Simplex> facets;
  for (int v = 1; v < n; ++v) facets.push_back({v, v + 1});
  return make(n, facets);
}

inline SimplicialComplex emptyComplex(int m) { return make(m, {}); }

/// Join of ∂Δ² with two disjoint points: the moment-angle space is a product
/// of a 5-sphere and a 3-sphere; the key fixture mixing even and odd data.
inline SimplicialComplex triangleJoinTwoPoints() {
  return make(5, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}});
}

/// Octahedron boundary = threefold join of two-point complexes.
inline SimplicialComplex octahedron() {
  std::vector<Simplex> facets;
  for (int i : {1, 4})
    for (int j : {2, 5})
      for (int k : {3, 6}) facets.push_back({i, j, k});
  return make(6, facets);
}

/// Minimal 6-vertex triangulation of the projective plane (torsion fixture:
/// its reduced cohomology differs between Q and F_2).
inline SimplicialComplex projectivePlane() {
  return make(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                  {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

/// Named corpus of small complexes (all m <= 6) shared by the property
/// suites. Size stays >= 25.
inline std::vector<std::pair<std::string, SimplicialComplex>> corpus() {
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  out.emplace_back("point", point());
  out.emplace_back("two-points", twoPoints());
  out.emplace_back("three-points", make(3, {{1}, {2}, {3}}));
  out.emplace_back("four-points", make(4, {{1}, {2}, {3}, {4}}));
  out.emplace_back("edge", fullSimplex(2));
  out.emplace_back("triangle", fullSimplex(3));
  out.emplace_back("tetrahedron", fullSimplex(4));
  out.emplace_back("path-3", pathGraph(3));
  out.emplace_back("path-4", pathGraph(4));
  out.emplace_back("boundary-triangle", boundaryTriangle());
  out.emplace_back("boundary-3-simplex", boundarySimplex(4));
  out.emplace_back("boundary-4-simplex", boundarySimplex(5));
  out.emplace_back("cycle-4", cycle(4));
  out.emplace_back("cycle-5", cycle(5));
  out.emplace_back("cycle-6", cycle(6));
  out.emplace_back("two-points-ghost", make(3, {{1}, {2}}));
  out.emplace_back("edge-ghost", make(3, {{1, 2}}));
  out.emplace_back("cycle-4-ghost", make(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  out.emplace_back("disjoint-edges", make(4, {{1, 2}, {3, 4}}));
  out.emplace_back("edge-point", make(3, {{1, 2}, {3}}));
  out.emplace_back("bipartite-2-3", make(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
  out.emplace_back("triangle-join-two-points", triangleJoinTwoPoints());
  out.emplace_back("two-boundary-triangles", make(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}));
  out.emplace_back("star-4", make(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  out.emplace_back("book", make(4, {{1, 2, 3}, {1, 2, 4}}));
  out.emplace_back("octahedron", octahedron());
  out.emplace_back("cycle-4-point", make(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5}}));
  out.emplace_back("cycle-6-chord", make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}}));
  out.emplace_back("triangle-point", make(4, {{1, 2, 3}, {4}}));
  out.emplace_back("projective-plane", projectivePlane());
  return out;
}

}  // namespace fixtures
