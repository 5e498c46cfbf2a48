// Dense matrices over an exact field (Rational or RationalFunction).
//
// Everything is plain Gaussian elimination; exactness of the coefficient
// field makes ranks and kernels exact.
#pragma once

#include <stdexcept>
#include <vector>

namespace quotkit {

template <class F>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<F>(cols, F(0))) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int i, int j) { return a_[i][j]; }
  const F& operator()(int i, int j) const { return a_[i][j]; }
  const std::vector<F>& row(int i) const { return a_[i]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("Mat: dimension mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (a_[i][k].is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.a_[k][j].is_zero()) continue;
          r.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
      }
    return r;
  }

  Mat submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Mat r(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) r.a_[i][j] = a_.at(rs[i]).at(cs[j]);
    return r;
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!a_[i][c].is_zero()) { p = i; break; }
      if (p < 0) continue;
      std::swap(a_[p], a_[r]);
      F inv = F(1) / a_[r][c];
      for (int j = c; j < cols_; ++j) a_[r][j] = a_[r][j] * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || a_[i][c].is_zero()) continue;
        F f = a_[i][c];
        for (int j = c; j < cols_; ++j) a_[i][j] = a_[i][j] - f * a_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  F det() const {
    if (rows_ != cols_) throw std::logic_error("Mat: det of non-square matrix");
    Mat m = *this;
    F d(1);
    for (int c = 0; c < cols_; ++c) {
      int p = -1;
      for (int i = c; i < rows_; ++i)
        if (!m.a_[i][c].is_zero()) { p = i; break; }
      if (p < 0) return F(0);
      if (p != c) { std::swap(m.a_[p], m.a_[c]); d = F(0) - d; }
      d = d * m.a_[c][c];
      F inv = F(1) / m.a_[c][c];
      for (int i = c + 1; i < rows_; ++i) {
        if (m.a_[i][c].is_zero()) continue;
        F f = m.a_[i][c] * inv;
        for (int j = c; j < cols_; ++j) m.a_[i][j] = m.a_[i][j] - f * m.a_[c][j];
      }
    }
    return d;
  }

  // Inverse; throws std::domain_error if singular.
  Mat inverse() const {
    if (rows_ != cols_) throw std::logic_error("Mat: inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = a_[i][j];
      aug(i, cols_ + i) = F(1);
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != rows_ || piv.back() >= cols_)
      throw std::domain_error("Mat: singular matrix");
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
    return r;
  }

  // Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<F>> kernel_basis() const {
    Mat m = *this;
    auto piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<F> v(cols_, F(0));
      v[c] = F(1);
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F(0) - m(static_cast<int>(r), c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<F>> a_;
};

}  // namespace quotkit
