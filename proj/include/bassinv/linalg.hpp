#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "bassinv/rational.hpp"

namespace bassinv {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form by exact elimination (no tolerances).
/// Returns the pivot column of each nonzero row.
template <typename Scalar>
std::vector<Eigen::Index> reduce_row_echelon(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space, one column per free variable. Each basis
/// vector has a 1 in its free coordinate and 0 in the other free coordinates.
template <typename Scalar>
Matrix<Scalar> null_space(Matrix<Scalar> m) {
  const std::vector<Eigen::Index> pivots = reduce_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), free);
    }
    ++k;
  }
  return basis;
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  Scalar det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col) / m(col, col);
      m.row(r) -= factor * m.row(col);
    }
  }
  return det;
}

/// det of the top-left k x k blocks, k = 1..n.
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(const Matrix<Scalar>& m) {
  std::vector<Scalar> minors;
  for (Eigen::Index k = 1; k <= m.rows(); ++k) {
    minors.push_back(determinant<Scalar>(m.topLeftCorner(k, k)));
  }
  return minors;
}

}  // namespace bassinv
