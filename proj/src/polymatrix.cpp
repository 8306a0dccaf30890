#include "eddeg/polymatrix.hpp"

#include <stdexcept>
#include <utility>

#include "eddeg/resultant.hpp"

namespace eddeg {

PolyMatrix::PolyMatrix(int n, int arity)
    : n_(n), arity_(arity), rows_(n, std::vector<MultiPoly>(n, MultiPoly(arity))) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

MultiPoly PolyMatrix::det() const {
  // Bareiss: every division is exact, so intermediate growth stays tame.
  auto m = rows_;
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(arity_, 1);
  for (int k = 0; k + 1 < n_; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n_; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return MultiPoly(arity_);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? num : multipoly_divide_exact(num, prev);
      }
      m[i][k] = MultiPoly(arity_);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n_ - 1][n_ - 1];
  return sign < 0 ? -d : d;
}

MultiPoly PolyMatrix::det_cofactor() const {
  if (n_ == 1) return rows_[0][0];
  MultiPoly acc(arity_);
  for (int j = 0; j < n_; ++j) {
    if (rows_[0][j].is_zero()) continue;
    PolyMatrix minor(n_ - 1, arity_);
    for (int i = 1; i < n_; ++i) {
      int jj = 0;
      for (int c = 0; c < n_; ++c) {
        if (c == j) continue;
        minor.at(i - 1, jj++) = rows_[i][c];
      }
    }
    MultiPoly term = rows_[0][j] * minor.det_cofactor();
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

PolyMatrix PolyMatrix::adjugate() const {
  PolyMatrix adj(n_, arity_);
  if (n_ == 1) {
    adj.at(0, 0) = MultiPoly::constant(arity_, 1);
    return adj;
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      PolyMatrix minor(n_ - 1, arity_);
      int ri = 0;
      for (int r = 0; r < n_; ++r) {
        if (r == i) continue;
        int cj = 0;
        for (int c = 0; c < n_; ++c) {
          if (c == j) continue;
          minor.at(ri, cj++) = rows_[r][c];
        }
        ++ri;
      }
      MultiPoly cof = minor.det();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
    }
  }
  return adj;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      if (f == 0) continue;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace eddeg
