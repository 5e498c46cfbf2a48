// Rectangular matrices of multivariate polynomials, with exact minors.
#pragma once

#include <vector>

#include "quotkit/multipoly.hpp"

namespace quotkit {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MultiPoly& operator()(int i, int j) { return a_.at(i).at(j); }
  const MultiPoly& operator()(int i, int j) const { return a_.at(i).at(j); }

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  // Determinant of the square submatrix on the given index sets (0-based).
  // Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
  MultiPoly minor(const std::vector<int>& rowset, const std::vector<int>& colset) const;

  // Full determinant (square matrices).
  MultiPoly det() const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<MultiPoly>> a_;
};

}  // namespace quotkit
