#pragma once

#include "borekit/integer.hpp"

#include <Eigen/Core>

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace borekit {

/// D = U * M * V with D diagonal, d_1 | d_2 | ... | d_r, d_i > 0, and U, V unimodular.
/// Uinv and Vinv are the exact inverses of U and V.
template <typename Scalar>
struct SmithDecomposition {
  DenseMatrix<Scalar> D, U, V, Uinv, Vinv;
  Eigen::Index rank = 0;

  std::vector<Scalar> invariantFactors() const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(rank));
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar absValue(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
class SmithReducer {
 public:
  SmithReducer(DenseMatrix<Scalar> M, bool track) : track_(track) {
    d_ = std::move(M);
    const auto m = d_.rows(), n = d_.cols();
    if (track_) {
      u_ = DenseMatrix<Scalar>::Identity(m, m);
      uinv_ = DenseMatrix<Scalar>::Identity(m, m);
      v_ = DenseMatrix<Scalar>::Identity(n, n);
      vinv_ = DenseMatrix<Scalar>::Identity(n, n);
    }
  }

  SmithDecomposition<Scalar> run() {
    const auto m = d_.rows(), n = d_.cols();
    Eigen::Index t = 0;
    for (; t < std::min(m, n); ++t) {
      auto start = minimalEntry(t, t, m, n);
      if (!start) break;
      swapRows(t, start->first);
      swapCols(t, start->second);
      reducePivot(t);
      if (d_(t, t) < Scalar(0)) negateRow(t);
    }
    SmithDecomposition<Scalar> out;
    out.rank = t;
    out.D = std::move(d_);
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.Uinv = std::move(uinv_);
    out.Vinv = std::move(vinv_);
    return out;
  }

 private:
  std::optional<std::pair<Eigen::Index, Eigen::Index>> minimalEntry(Eigen::Index r0, Eigen::Index c0,
                                                                    Eigen::Index r1, Eigen::Index c1) const {
    std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
    Scalar bestAbs(0);
    for (Eigen::Index j = c0; j < c1; ++j)
      for (Eigen::Index i = r0; i < r1; ++i) {
        if (d_(i, j) == Scalar(0)) continue;
        Scalar a = absValue(d_(i, j));
        if (!best || a < bestAbs) {
          best = {i, j};
          bestAbs = a;
          if (bestAbs == Scalar(1)) return best;
        }
      }
    return best;
  }

  // Clears row and column t and enforces divisibility of the trailing block.
  void reducePivot(Eigen::Index t) {
    const auto m = d_.rows(), n = d_.cols();
    for (;;) {
      // Smallest nonzero in the pivot cross moves to (t, t).
      Eigen::Index bi = t, bj = t;
      Scalar bestAbs = absValue(d_(t, t));
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (d_(i, t) != Scalar(0) && absValue(d_(i, t)) < bestAbs) {
          bi = i;
          bj = t;
          bestAbs = absValue(d_(i, t));
        }
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (d_(t, j) != Scalar(0) && absValue(d_(t, j)) < bestAbs) {
          bi = t;
          bj = j;
          bestAbs = absValue(d_(t, j));
        }
      swapRows(t, bi);
      swapCols(t, bj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d_(i, t) == Scalar(0)) continue;
        Scalar q = d_(i, t) / d_(t, t);
        addRow(i, t, Scalar(-q));
        if (d_(i, t) != Scalar(0)) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d_(t, j) == Scalar(0)) continue;
        Scalar q = d_(t, j) / d_(t, t);
        addCol(j, t, Scalar(-q));
        if (d_(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (Eigen::Index i = t + 1; i < m && divisible; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d_(i, j) % d_(t, t) != Scalar(0)) {
            addRow(t, i, Scalar(1));
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }

  void addRow(Eigen::Index i, Eigen::Index j, const Scalar& q) {
    d_.row(i) += q * d_.row(j);
    if (!track_) return;
    u_.row(i) += q * u_.row(j);
    uinv_.col(j) -= q * uinv_.col(i);
  }
  void addCol(Eigen::Index i, Eigen::Index j, const Scalar& q) {
    d_.col(i) += q * d_.col(j);
    if (!track_) return;
    v_.col(i) += q * v_.col(j);
    vinv_.row(j) -= q * vinv_.row(i);
  }
  void swapRows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d_.row(i).swap(d_.row(j));
    if (!track_) return;
    u_.row(i).swap(u_.row(j));
    uinv_.col(i).swap(uinv_.col(j));
  }
  void swapCols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d_.col(i).swap(d_.col(j));
    if (!track_) return;
    v_.col(i).swap(v_.col(j));
    vinv_.row(i).swap(vinv_.row(j));
  }
  void negateRow(Eigen::Index i) {
    d_.row(i) *= Scalar(-1);
    if (!track_) return;
    u_.row(i) *= Scalar(-1);
    uinv_.col(i) *= Scalar(-1);
  }

  bool track_;
  DenseMatrix<Scalar> d_, u_, v_, uinv_, vinv_;
};

}  // namespace detail

/// Smith normal form over the integers (or any Euclidean scalar with truncating
/// division). Transforms and their inverses are tracked unless `trackTransforms`
/// is false, in which case only D and rank are meaningful.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smithNormalForm(const Eigen::MatrixBase<Derived>& M,
                                                             bool trackTransforms = true) {
  using Scalar = typename Derived::Scalar;
  return detail::SmithReducer<Scalar>(DenseMatrix<Scalar>(M), trackTransforms).run();
}

}  // namespace borekit
