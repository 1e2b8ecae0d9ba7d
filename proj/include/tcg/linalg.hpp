#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "tcg/field.hpp"

namespace tcg {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Entry-by-entry exact zero test (no absolute values, works for any field).
template <class Derived>
bool isExactlyZero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != Scalar(0)) return false;
  return true;
}

/// Reduces A to row echelon form in place (exact field pivoting: first
/// nonzero entry per column, no magnitude comparisons). Returns pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rowEchelonInPlace(MatrixX<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != Scalar(0)) { pr = r; break; }
    }
    if (pr < 0) continue;
    if (pr != row) a.row(pr).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != row && a(r, col) != Scalar(0)) a.row(r) -= a(r, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rank(MatrixX<Scalar> a) {
  return static_cast<Eigen::Index>(rowEchelonInPlace(a).size());
}

/// Columns of the returned matrix form a basis of { x : A x = 0 }.
template <class Scalar>
MatrixX<Scalar> nullspaceBasis(MatrixX<Scalar> a) {
  const Eigen::Index n = a.cols();
  const auto pivots = rowEchelonInPlace(a);
  std::vector<bool> isPivot(static_cast<size_t>(n), false);
  for (auto c : pivots) isPivot[static_cast<size_t>(c)] = true;
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (isPivot[static_cast<size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], k) = -a(static_cast<Eigen::Index>(r), free);
    }
    ++k;
  }
  return basis;
}

/// Exact solver for repeated right-hand sides: factors A once (reduced row
/// echelon with the row transform recorded), then solves A x = b with free
/// variables pinned to zero.
template <class Scalar>
class LinearSolver {
 public:
  explicit LinearSolver(const MatrixX<Scalar>& a) : cols_(a.cols()) {
    MatrixX<Scalar> aug(a.rows(), a.cols() + a.rows());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(a.rows()) = MatrixX<Scalar>::Identity(a.rows(), a.rows());
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
      Eigen::Index pr = -1;
      for (Eigen::Index r = row; r < aug.rows(); ++r) {
        if (aug(r, col) != Scalar(0)) { pr = r; break; }
      }
      if (pr < 0) continue;
      if (pr != row) aug.row(pr).swap(aug.row(row));
      const Scalar inv = Scalar(1) / aug(row, col);
      aug.row(row) *= inv;
      for (Eigen::Index r = 0; r < aug.rows(); ++r) {
        if (r != row && aug(r, col) != Scalar(0)) aug.row(r) -= aug(r, col) * aug.row(row);
      }
      pivotCols_.push_back(col);
      ++row;
    }
    rref_ = aug.leftCols(a.cols());
    transform_ = aug.rightCols(a.rows());
  }

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivotCols_.size()); }

  /// Returns a solution of A x = b, or nullopt if the system is inconsistent.
  std::optional<VectorX<Scalar>> solve(const VectorX<Scalar>& b) const {
    VectorX<Scalar> c = transform_ * b;
    for (Eigen::Index r = static_cast<Eigen::Index>(pivotCols_.size()); r < c.size(); ++r) {
      if (c(r) != Scalar(0)) return std::nullopt;
    }
    VectorX<Scalar> x = VectorX<Scalar>::Zero(cols_);
    for (size_t r = 0; r < pivotCols_.size(); ++r) {
      x(pivotCols_[r]) = c(static_cast<Eigen::Index>(r));
    }
    return x;
  }

 private:
  Eigen::Index cols_;
  std::vector<Eigen::Index> pivotCols_;
  MatrixX<Scalar> rref_;
  MatrixX<Scalar> transform_;
};

/// Incrementally built subspace of F^n kept in reduced echelon form.
/// insert() reduces the vector against the current basis and keeps the
/// remainder when nonzero, so dim() and contains() stay exact.
template <class Scalar>
class VectorSpan {
 public:
  explicit VectorSpan(Eigen::Index ambientDim) : n_(ambientDim) {}

  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index ambientDim() const { return n_; }
  bool isZero() const { return rows_.empty(); }

  /// Returns true when v was independent of the current span (and was added).
  bool insert(VectorX<Scalar> v) {
    reduce(v);
    Eigen::Index lead = leading(v);
    if (lead < 0) return false;
    v *= Scalar(1) / v(lead);
    for (auto& [l, w] : rows_) {
      if (w(lead) != Scalar(0)) w -= w(lead) * v;
    }
    rows_.emplace_back(lead, std::move(v));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

  bool contains(VectorX<Scalar> v) const {
    reduce(v);
    return leading(v) < 0;
  }

  std::vector<VectorX<Scalar>> basis() const {
    std::vector<VectorX<Scalar>> out;
    out.reserve(rows_.size());
    for (const auto& [l, w] : rows_) out.push_back(w);
    return out;
  }

 private:
  static Eigen::Index leading(const VectorX<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != Scalar(0)) return i;
    return -1;
  }

  void reduce(VectorX<Scalar>& v) const {
    for (const auto& [lead, w] : rows_) {
      if (v(lead) != Scalar(0)) v -= v(lead) * w;
    }
  }

  Eigen::Index n_;
  std::vector<std::pair<Eigen::Index, VectorX<Scalar>>> rows_;
};

}  // namespace tcg
