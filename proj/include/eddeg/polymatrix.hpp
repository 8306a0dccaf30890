#pragma once

#include <vector>

#include "eddeg/multipoly.hpp"

namespace eddeg {

// Square matrix with polynomial entries; all entries share one arity.
class PolyMatrix {
 public:
  PolyMatrix(int n, int arity);

  int size() const { return n_; }
  int arity() const { return arity_; }
  MultiPoly& at(int i, int j) { return rows_[i][j]; }
  const MultiPoly& at(int i, int j) const { return rows_[i][j]; }

  // Fraction-free elimination; exact over the coefficient ring.
  MultiPoly det() const;

  // Expansion by minors; only sensible for small sizes, kept as a cross-check.
  MultiPoly det_cofactor() const;

  PolyMatrix adjugate() const;

 private:
  int n_;
  int arity_;
  std::vector<std::vector<MultiPoly>> rows_;
};

Rational rational_det(std::vector<std::vector<Rational>> m);

}  // namespace eddeg
