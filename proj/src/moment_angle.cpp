#include "tcg/moment_angle.hpp"

#include <algorithm>

namespace tcg {

int catTorus(const SimplicialComplex& k) {
  if (k.empty()) throw InputError("cat_torus: the empty complex has no moment-angle space");
  return static_cast<int>(k.facets().size());
}

Eigen::MatrixXi kMatrix(const SimplicialComplex& k) {
  const auto& facets = k.facets();  // already lexicographic
  const int s = static_cast<int>(facets.size());
  const int m = k.vertexCount();
  Eigen::MatrixXi out(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      Simplex uni;
      std::set_union(facets[static_cast<size_t>(i)].begin(), facets[static_cast<size_t>(i)].end(),
                     facets[static_cast<size_t>(j)].begin(), facets[static_cast<size_t>(j)].end(),
                     std::back_inserter(uni));
      out(i, j) = m - static_cast<int>(uni.size());
    }
  }
  return out;
}

long long tcUpperBound(const SimplicialComplex& k) {
  const Eigen::MatrixXi km = kMatrix(k);
  long long total = 0;
  for (Eigen::Index i = 0; i < km.rows(); ++i)
    for (Eigen::Index j = 0; j < km.cols(); ++j) total += km(i, j) + 1;
  return total;
}

int zkDimension(const SimplicialComplex& k) {
  if (k.empty()) return k.vertexCount();
  return k.vertexCount() + 1 + k.dimension();
}

bool gConnectedFlag(const SimplicialComplex& k) {
  if (k.empty()) throw InputError("g_connected: the empty complex has no moment-angle space");
  return true;
}

std::vector<long> zkBettiForField(const SimplicialComplex& k, const FieldSpec& field, int maxVertices) {
  if (field.rationals) return zkBetti<Rational>(k, maxVertices);
  ScopedPrime guard(field.p);
  return zkBetti<Fp>(k, maxVertices);
}

MomentAngleProfile momentAngleProfile(const SimplicialComplex& k, const FieldSpec& field,
                                      int maxVertices) {
  MomentAngleProfile p;
  p.catTorus = catTorus(k);
  p.kMatrix = kMatrix(k);
  p.tcUpperBound = tcUpperBound(k);
  p.zkDimension = zkDimension(k);
  p.zkBetti = zkBettiForField(k, field, maxVertices);
  p.field = field;
  return p;
}

}  // namespace tcg
