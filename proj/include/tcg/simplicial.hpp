#pragma once

#include <string>
#include <vector>

#include "tcg/errors.hpp"

namespace tcg {

/// A simplex as its sorted list of 1-based vertices.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex on the vertex set [m] = {1,...,m},
/// stored by its facets (maximal simplices, kept as an antichain in pure
/// lexicographic order). Vertices of [m] that lie in no facet are "ghost"
/// vertices; they are legal and flow through all operations.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Sorts, deduplicates and absorbs non-maximal faces into the antichain.
  /// Throws InputError on out-of-range vertices or empty faces.
  static SimplicialComplex fromFacets(int m, std::vector<Simplex> faces);

  int vertexCount() const { return m_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }

  /// Dimension of the complex; -1 when empty.
  int dimension() const;

  /// Membership test for a nonempty sorted simplex.
  bool contains(const Simplex& s) const;

  /// All nonempty simplices, sorted by (size, lex). This is the global
  /// enumeration order used for subdivision vertex numbering.
  std::vector<Simplex> simplices() const;

  /// Vertices that appear in some facet, ascending.
  std::vector<int> vertices() const;
  std::vector<int> ghostVertices() const;

  /// Sum over nonempty simplices of (-1)^dim.
  long long eulerCharacteristic() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int m_ = 0;
  std::vector<Simplex> facets_;
};

/// Parses the facet-list text format: optional header "m=<int>;", then
/// ';'-separated facets, each a space-separated vertex list. Errors carry
/// line/column positions.
SimplicialComplex parseComplexText(const std::string& text);

struct SubcomplexResult {
  SimplicialComplex complex;     // re-indexed over J
  std::vector<int> vertexMap;    // vertexMap[i-1] = original vertex of new vertex i
};

/// Full subcomplex K_J = { s in K : s subset of J }, re-indexed over J.
SubcomplexResult fullSubcomplex(const SimplicialComplex& k, const std::vector<int>& j);

/// K_J in ambient labels: same vertex count, facets filtered to J.
SimplicialComplex fullSubcomplexAmbient(const SimplicialComplex& k, const std::vector<int>& j);

struct Components {
  std::vector<int> componentOf;  // size m, 0-based component ids over all of [m]
  int count = 0;                 // total components; ghost vertices are singletons
  int nonGhostCount = 0;         // components containing at least one non-ghost vertex
};

/// Union-find over the edges of K. Ghost vertices come out as singleton
/// components (counted in `count`, not in `nonGhostCount`).
Components pathComponents(const SimplicialComplex& k);

struct Subdivision {
  SimplicialComplex complex;
  /// For new vertex i (1-based): the original simplex it subdivides, or empty
  /// when the vertex is a carried-over ghost (then ghostOrigin[i-1] > 0).
  std::vector<Simplex> vertexSimplex;
  std::vector<int> ghostOrigin;
};

/// Barycentric subdivision: new vertices are the simplices of K (in the
/// simplices() order), facets are the maximal flags. Ghost vertices of K are
/// carried over as ghosts, so component counts and Euler characteristic are
/// preserved.
Subdivision barycentricSubdivision(const SimplicialComplex& k);

std::string simplexToString(const Simplex& s);

}  // namespace tcg
