#include "quotkit/polymatrix.hpp"

#include <stdexcept>

namespace quotkit {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(rows, std::vector<MultiPoly>(cols, MultiPoly(ring_))) {}

namespace {

MultiPoly det_cofactor(const std::vector<std::vector<const MultiPoly*>>& m, const RingPtr& ring) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return *m[0][0];
  MultiPoly acc(ring);
  for (int j = 0; j < n; ++j) {
    if (m[0][j]->is_zero()) continue;
    std::vector<std::vector<const MultiPoly*>> sub(n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) sub[i - 1].push_back(m[i][k]);
    MultiPoly term = *m[0][j] * det_cofactor(sub, ring);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Bareiss fraction-free elimination; all divisions are exact.
MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m, const RingPtr& ring) {
  const int n = static_cast<int>(m.size());
  MultiPoly prev = MultiPoly::constant(ring, Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) { p = i; break; }
      if (p < 0) return MultiPoly(ring);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = MultiPoly(ring);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

MultiPoly PolyMatrix::minor(const std::vector<int>& rowset, const std::vector<int>& colset) const {
  if (rowset.size() != colset.size())
    throw std::invalid_argument("PolyMatrix::minor: index sets of unequal size");
  for (int r : rowset)
    if (r < 0 || r >= rows_) throw std::out_of_range("PolyMatrix::minor: row index");
  for (int c : colset)
    if (c < 0 || c >= cols_) throw std::out_of_range("PolyMatrix::minor: column index");
  const int n = static_cast<int>(rowset.size());
  if (n == 0) return MultiPoly::constant(ring_, Rational(1));
  if (n <= 4) {
    std::vector<std::vector<const MultiPoly*>> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i].push_back(&a_[rowset[i]][colset[j]]);
    return det_cofactor(m, ring_);
  }
  std::vector<std::vector<MultiPoly>> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i].push_back(a_[rowset[i]][colset[j]]);
  return det_bareiss(std::move(m), ring_);
}

MultiPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw std::logic_error("PolyMatrix::det: non-square matrix");
  std::vector<int> idx(rows_);
  for (int i = 0; i < rows_; ++i) idx[i] = i;
  return minor(idx, idx);
}

}  // namespace quotkit
