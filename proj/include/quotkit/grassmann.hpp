// Chart atlas of the Grassmannian Grass(r, d).
//
// A point in chart I is a d x r matrix whose I-indexed column minor is the
// identity. Charts are glued by theta_{I,J}(X) = (X_J)^{-1} X. The same code
// runs over Q and over Q(t); the latter powers the valuative-criterion limit.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quotkit/errors.hpp"
#include "quotkit/matrix.hpp"
#include "quotkit/ratfunc.hpp"
#include "quotkit/rational.hpp"

namespace quotkit {

// Strictly increasing list of d column indices from {1..r} (1-based).
using SubsetIndex = std::vector<int>;

std::vector<SubsetIndex> all_subsets(int r, int d);
std::string subset_str(const SubsetIndex& s);

template <class F>
struct ChartPoint {
  int r = 0, d = 0;
  SubsetIndex chart;  // the I with X_I = identity
  Mat<F> X;           // d x r

  friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
    return a.r == b.r && a.d == b.d && a.chart == b.chart && a.X == b.X;
  }
};

template <class F>
struct PluckerCoordinates {
  int r = 0, d = 0;
  std::map<SubsetIndex, F> coords;
};

namespace detail {

template <class F>
Mat<F> column_minor(const Mat<F>& X, const SubsetIndex& J) {
  std::vector<int> rows(X.rows());
  for (int i = 0; i < X.rows(); ++i) rows[i] = i;
  std::vector<int> cols;
  for (int j : J) cols.push_back(j - 1);
  return X.submatrix(rows, cols);
}

template <class F>
void check_chart_invariant(const ChartPoint<F>& p) {
  Mat<F> m = column_minor(p.X, p.chart);
  if (!(m == Mat<F>::identity(p.d)))
    throw std::logic_error("ChartPoint: chart minor is not the identity");
}

}  // namespace detail

// Canonical chart form of a rank-d matrix: I is the lexicographically
// smallest column subset with invertible minor and the result is (M_I)^{-1} M.
template <class F>
ChartPoint<F> normalize(const Mat<F>& M) {
  const int d = M.rows(), r = M.cols();
  // Greedy scan gives the lex-smallest independent column set.
  Mat<F> work = M;
  std::vector<int> pivots = work.rref();
  if (static_cast<int>(pivots.size()) < d)
    throw RankDeficientError("normalize: matrix rank below " + std::to_string(d));
  SubsetIndex I;
  for (int c : pivots) I.push_back(c + 1);
  ChartPoint<F> p;
  p.r = r;
  p.d = d;
  p.chart = I;
  p.X = detail::column_minor(M, I).inverse() * M;
  return p;
}

// theta_{I,J}: re-normalize the point in chart J. Throws OutsideOverlapError
// when the J-minor is singular.
template <class F>
ChartPoint<F> transition(const ChartPoint<F>& p, const SubsetIndex& J) {
  if (J == p.chart) return p;
  Mat<F> XJ = detail::column_minor(p.X, J);
  Mat<F> inv;
  try {
    inv = XJ.inverse();
  } catch (const std::domain_error&) {
    throw OutsideOverlapError("transition: point lies outside chart overlap U^I_" +
                              subset_str(J));
  }
  ChartPoint<F> q;
  q.r = p.r;
  q.d = p.d;
  q.chart = J;
  q.X = inv * p.X;
  return q;
}

// Checks theta_{I,K} = theta_{I,J} theta_{J,K} on one point, exactly.
template <class F>
bool cocycle_check(const ChartPoint<F>& p, const SubsetIndex& J, const SubsetIndex& K) {
  ChartPoint<F> via = transition(transition(p, J), K);
  ChartPoint<F> direct = transition(p, K);
  return via == direct;
}

// Transition matrix g_{I,J} = (X^I_J)^{-1} of the universal rank-d quotient.
template <class F>
Mat<F> universal_bundle_transition(const ChartPoint<F>& p, const SubsetIndex& J) {
  Mat<F> XJ = detail::column_minor(p.X, J);
  try {
    return XJ.inverse();
  } catch (const std::domain_error&) {
    throw OutsideOverlapError("universal_bundle_transition: outside overlap");
  }
}

// All C(r,d) maximal minors of the point's matrix; coords[I] = 1.
template <class F>
PluckerCoordinates<F> plucker(const ChartPoint<F>& p) {
  PluckerCoordinates<F> out;
  out.r = p.r;
  out.d = p.d;
  for (const auto& K : all_subsets(p.r, p.d)) out.coords[K] = detail::column_minor(p.X, K).det();
  return out;
}

// Projective equality of Plucker vectors.
template <class F>
bool plucker_equal(const PluckerCoordinates<F>& a, const PluckerCoordinates<F>& b) {
  if (a.r != b.r || a.d != b.d) return false;
  // Find a common nonzero coordinate to fix the scalar.
  for (const auto& [K, va] : a.coords) {
    const F& vb = b.coords.at(K);
    if (va.is_zero() != vb.is_zero()) return false;
    if (va.is_zero()) continue;
    F scale = vb / va;
    for (const auto& [L, wa] : a.coords)
      if (!(wa * scale == b.coords.at(L))) return false;
    return true;
  }
  // Both identically zero: not legal Plucker data, treat as unequal.
  return false;
}

// The three-term quadratic relations for d = 2:
// p_{ij} p_{kl} - p_{ik} p_{jl} + p_{il} p_{jk} = 0 for all i<j<k<l.
template <class F>
bool plucker_relation_check(const PluckerCoordinates<F>& c) {
  if (c.d != 2) throw PreconditionError("plucker_relation_check: requires d = 2");
  auto at = [&](int i, int j) { return c.coords.at(SubsetIndex{i, j}); };
  for (int i = 1; i <= c.r; ++i)
    for (int j = i + 1; j <= c.r; ++j)
      for (int k = j + 1; k <= c.r; ++k)
        for (int l = k + 1; l <= c.r; ++l) {
          F lhs = at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k);
          if (!lhs.is_zero()) return false;
        }
  return true;
}

struct DvrLimit {
  SubsetIndex chart;                      // J with minimal minor valuation
  ChartPoint<RationalFunction> integral;  // all entries have nu >= 0
  ChartPoint<Rational> special_fiber;     // the integral point at t = 0
};

// Valuative-criterion prolongation: renormalize a Q(t)-point in the chart
// whose minor has minimal t-adic valuation, then specialize at t = 0.
DvrLimit dvr_limit(const Mat<RationalFunction>& M);

}  // namespace quotkit
