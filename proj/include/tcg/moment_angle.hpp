#pragma once

#include <Eigen/Core>

#include <vector>

#include "tcg/cohomology.hpp"
#include "tcg/field.hpp"
#include "tcg/simplicial.hpp"

namespace tcg {

/// Invariants of the moment-angle complex Z_K read off the complex K:
/// equivariant torus category, the pairwise complement-overlap matrix with its
/// complexity upper bound, cell dimension and exact Betti numbers.
struct MomentAngleProfile {
  int catTorus = 0;
  Eigen::MatrixXi kMatrix;
  long long tcUpperBound = 0;
  int zkDimension = 0;
  std::vector<long> zkBetti;  // degree-indexed, 0..zkDimension
  FieldSpec field;
};

/// Equivariant category of Z_K under the torus action: the number of maximal
/// simplices. Throws InputError for the empty complex.
int catTorus(const SimplicialComplex& k);

/// k_ij = |([m] - s_i) ∩ ([m] - s_j)| over facets in lexicographic order.
Eigen::MatrixXi kMatrix(const SimplicialComplex& k);

/// Sum of (k_ij + 1) over all facet pairs.
long long tcUpperBound(const SimplicialComplex& k);

/// Cell dimension of Z_K: m + 1 + dim K for nonempty K, m for empty K.
int zkDimension(const SimplicialComplex& k);

/// True for every nonempty K (the moment-angle complex is torus-connected);
/// throws InputError for the empty complex.
bool gConnectedFlag(const SimplicialComplex& k);

/// Betti numbers of Z_K over the field, via the Hochster decomposition:
/// rank in degree d is the sum over J ⊆ [m] of rank H~^{d-|J|-1}(K_J).
template <class Scalar>
std::vector<long> zkBetti(const SimplicialComplex& k, int maxVertices = 20) {
  const int m = k.vertexCount();
  if (m > maxVertices)
    throw BudgetError("zk_betti: 2^" + std::to_string(m) + " subsets exceed the budget (max m = " +
                      std::to_string(maxVertices) + ")");
  std::vector<long> betti(static_cast<size_t>(zkDimension(k)) + 1, 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> j;
    for (int v = 1; v <= m; ++v) {
      if (mask & (std::uint32_t{1} << (v - 1))) j.push_back(v);
    }
    const auto ranks = reducedBetti<Scalar>(fullSubcomplexAmbient(k, j));
    for (size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] == 0) continue;
      const int l = static_cast<int>(i) - 1;
      const size_t degree = j.size() + static_cast<size_t>(l) + 1;
      betti.at(degree) += ranks[i];
    }
  }
  return betti;
}

std::vector<long> zkBettiForField(const SimplicialComplex& k, const FieldSpec& field, int maxVertices = 20);

MomentAngleProfile momentAngleProfile(const SimplicialComplex& k, const FieldSpec& field,
                                      int maxVertices = 20);

}  // namespace tcg
