#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tcg/linalg.hpp"
#include "tcg/simplicial.hpp"

namespace tcg {

/// Reduced simplicial cochain complex of K over an exact field, augmented:
/// the empty simplex is always present in degree -1, so the empty complex has
/// reduced H^{-1} of rank 1 (the convention the Hochster decomposition needs).
/// Orientation signs come from the global vertex order 1 < 2 < ... < m.
template <class Scalar>
class CochainComplex {
 public:
  explicit CochainComplex(const SimplicialComplex& k) {
    bySize_.resize(static_cast<size_t>(k.dimension() + 2));
    bySize_[0] = {Simplex{}};
    for (const auto& s : k.simplices()) bySize_[s.size()].push_back(s);
    index_.resize(bySize_.size());
    for (size_t sz = 0; sz < bySize_.size(); ++sz) {
      for (size_t i = 0; i < bySize_[sz].size(); ++i) index_[sz][bySize_[sz][i]] = static_cast<int>(i);
    }
  }

  /// Highest cochain degree that can be nonzero (= dim K).
  int maxDegree() const { return static_cast<int>(bySize_.size()) - 2; }

  Eigen::Index dim(int l) const {
    const int sz = l + 1;
    if (sz < 0 || sz >= static_cast<int>(bySize_.size())) return 0;
    return static_cast<Eigen::Index>(bySize_[static_cast<size_t>(sz)].size());
  }

  const std::vector<Simplex>& simplicesOfSize(int sz) const {
    static const std::vector<Simplex> none;
    if (sz < 0 || sz >= static_cast<int>(bySize_.size())) return none;
    return bySize_[static_cast<size_t>(sz)];
  }

  /// Index of a sorted simplex within its size bucket, or -1 if absent.
  int indexOf(const Simplex& s) const {
    const size_t sz = s.size();
    if (sz >= index_.size()) return -1;
    auto it = index_[sz].find(s);
    return it == index_[sz].end() ? -1 : it->second;
  }

  /// Matrix of the coboundary C^l -> C^{l+1}: entry (tau, sigma) is
  /// (-1)^pos(v) when tau = sigma + v, with pos the 0-based slot of v in tau.
  MatrixX<Scalar> coboundary(int l) const {
    const auto& domain = simplicesOfSize(l + 1);
    const auto& range = simplicesOfSize(l + 2);
    MatrixX<Scalar> d = MatrixX<Scalar>::Zero(static_cast<Eigen::Index>(range.size()),
                                              static_cast<Eigen::Index>(domain.size()));
    for (size_t ti = 0; ti < range.size(); ++ti) {
      const Simplex& tau = range[ti];
      for (size_t pos = 0; pos < tau.size(); ++pos) {
        Simplex sigma = tau;
        sigma.erase(sigma.begin() + static_cast<long>(pos));
        const int si = indexOf(sigma);
        if (si < 0) continue;  // cannot happen: complexes are downward closed
        d(static_cast<Eigen::Index>(ti), si) = (pos % 2 == 0) ? Scalar(1) : Scalar(-1);
      }
    }
    return d;
  }

 private:
  std::vector<std::vector<Simplex>> bySize_;        // bySize_[s] = simplices with s vertices
  std::vector<std::map<Simplex, int>> index_;
};

/// Reduced cohomology of one complex: ranks per degree, and (optionally)
/// explicit cocycle representatives with an exact reducer that rewrites any
/// cocycle as coordinates over the chosen representatives modulo coboundaries.
template <class Scalar>
class CohomologyData {
 public:
  explicit CohomologyData(const SimplicialComplex& k, bool withRepresentatives = false)
      : chains_(k) {
    const int top = chains_.maxDegree();
    for (int l = -1; l <= top; ++l) {
      Level lev;
      lev.l = l;
      MatrixX<Scalar> dOut = chains_.coboundary(l);
      MatrixX<Scalar> dIn = chains_.coboundary(l - 1);
      const Eigen::Index rOut = rank<Scalar>(dOut);
      const Eigen::Index rIn = rank<Scalar>(dIn);
      lev.rank = chains_.dim(l) - rOut - rIn;
      if (withRepresentatives) {
        MatrixX<Scalar> kernel = nullspaceBasis<Scalar>(std::move(dOut));
        VectorSpan<Scalar> span(chains_.dim(l));
        for (Eigen::Index c = 0; c < dIn.cols(); ++c) span.insert(dIn.col(c));
        for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
          if (span.insert(kernel.col(c))) lev.representatives.push_back(kernel.col(c));
        }
        MatrixX<Scalar> reducerMat(chains_.dim(l),
                                   static_cast<Eigen::Index>(lev.representatives.size()) + dIn.cols());
        for (size_t i = 0; i < lev.representatives.size(); ++i)
          reducerMat.col(static_cast<Eigen::Index>(i)) = lev.representatives[i];
        reducerMat.rightCols(dIn.cols()) = dIn;
        lev.reducer.emplace(reducerMat);
      }
      levels_.push_back(std::move(lev));
    }
  }

  const CochainComplex<Scalar>& chains() const { return chains_; }

  long betti(int l) const {
    const size_t i = static_cast<size_t>(l + 1);
    if (l < -1 || i >= levels_.size()) return 0;
    return static_cast<long>(levels_[i].rank);
  }

  int maxDegree() const { return chains_.maxDegree(); }

  const std::vector<VectorX<Scalar>>& representatives(int l) const {
    static const std::vector<VectorX<Scalar>> none;
    const size_t i = static_cast<size_t>(l + 1);
    if (l < -1 || i >= levels_.size()) return none;
    return levels_[i].representatives;
  }

  /// Coordinates of the class of `cocycle` over representatives(l).
  /// Throws if the vector is not a cocycle class of this degree.
  VectorX<Scalar> reduceToBasis(int l, const VectorX<Scalar>& cocycle) const {
    const size_t i = static_cast<size_t>(l + 1);
    if (l < -1 || i >= levels_.size()) {
      if (cocycle.size() == 0) return VectorX<Scalar>();
      throw InputError("cohomology: degree out of range in class reduction");
    }
    const Level& lev = levels_[i];
    auto sol = lev.reducer->solve(cocycle);
    if (!sol) throw InputError("cohomology: vector is not a cocycle class");
    return sol->head(static_cast<Eigen::Index>(lev.representatives.size()));
  }

 private:
  struct Level {
    int l = 0;
    Eigen::Index rank = 0;
    std::vector<VectorX<Scalar>> representatives;
    std::optional<LinearSolver<Scalar>> reducer;
  };

  CochainComplex<Scalar> chains_;
  std::vector<Level> levels_;
};

/// Ranks of reduced cohomology; entry [l+1] is the rank in degree l,
/// so index 0 holds the degree -1 convention slot.
template <class Scalar>
std::vector<long> reducedBetti(const SimplicialComplex& k) {
  CohomologyData<Scalar> data(k, false);
  std::vector<long> out;
  for (int l = -1; l <= data.maxDegree(); ++l) out.push_back(data.betti(l));
  return out;
}

}  // namespace tcg
