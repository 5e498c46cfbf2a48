#include <doctest.h>

#include "helpers.hpp"
#include "quotkit/grassmann.hpp"

using namespace quotkit;
using namespace qktest;

namespace {

Mat<Rational> from_rows(std::vector<std::vector<long>> rows) {
  Mat<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = Rational(rows[i][j]);
  return m;
}

// A random point of Grass(r,d) in a random chart.
ChartPoint<Rational> rand_point(int r, int d) {
  while (true) {
    Mat<Rational> m = rand_matrix(d, r, 3);
    try {
      return normalize(m);
    } catch (const RankDeficientError&) {
    }
  }
}

}  // namespace

TEST_CASE("normalize examples") {
  auto p1 = normalize(from_rows({{0, 5}}));
  CHECK(p1.chart == SubsetIndex{2});
  CHECK(p1.X(0, 0) == Rational(0));
  CHECK(p1.X(0, 1) == Rational(1));

  auto p2 = normalize(from_rows({{1, 0, 1}, {0, 1, 1}}));
  CHECK(p2.chart == SubsetIndex{1, 2});
  CHECK(p2.X == from_rows({{1, 0, 1}, {0, 1, 1}}));

  auto p3 = normalize(from_rows({{2, 4, 6}}));
  CHECK(p3.chart == SubsetIndex{1});
  CHECK(p3.X == from_rows({{1, 2, 3}}));

  CHECK_THROWS_AS(normalize(from_rows({{1, 1, 1}, {2, 2, 2}})), RankDeficientError);
}

TEST_CASE("transition examples") {
  // P^1 chart flip: I={1}, X=[1,x] -> J={2}: [1/x, 1]; oracle (X_J)^{-1} X.
  ChartPoint<Rational> p;
  p.r = 2;
  p.d = 1;
  p.chart = {1};
  p.X = Mat<Rational>(1, 2);
  p.X(0, 0) = Rational(1);
  p.X(0, 1) = Rational(5);
  auto q = transition(p, {2});
  CHECK(q.X(0, 0) == Rational(1, 5));
  CHECK(q.X(0, 1) == Rational(1));
  CHECK(transition(p, {1}) == p);

  // Outside overlap: x = 0 cannot move to chart {2}.
  p.X(0, 1) = Rational(0);
  CHECK_THROWS_AS(transition(p, {2}), OutsideOverlapError);
}

TEST_CASE("round trip returns the original matrix exactly") {
  for (int trial = 0; trial < 50; ++trial) {
    auto p = rand_point(4, 2);
    for (const auto& J : all_subsets(4, 2)) {
      bool ok = true, skip = false;
      try {
        auto q = transition(p, J);
        ok = transition(q, p.chart) == p;
      } catch (const OutsideOverlapError&) {
        skip = true;
      }
      if (!skip) CHECK(ok);
    }
  }
}

TEST_CASE("cocycle identity on random points of Grass(4,2)") {
  auto subsets = all_subsets(4, 2);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = rand_point(4, 2);
    const auto& J = subsets[rand_int(0, static_cast<int>(subsets.size()) - 1)];
    const auto& K = subsets[rand_int(0, static_cast<int>(subsets.size()) - 1)];
    bool ok = false, skip = false;
    try {
      ok = cocycle_check(p, J, K);
    } catch (const OutsideOverlapError&) {
      skip = true;
    }
    if (!skip) {
      CHECK(ok);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("cocycle identity over all chart triples, r <= 5, d <= 3") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
    auto subsets = all_subsets(r, d);
    for (int trial = 0; trial < 2; ++trial) {
      auto p = rand_point(r, d);
      for (const auto& J : subsets)
        for (const auto& K : subsets) {
          bool ok = false, skip = false;
          try {
            ok = cocycle_check(p, J, K);
          } catch (const OutsideOverlapError&) {
            skip = true;
          }
          if (!skip) CHECK(ok);
        }
    }
  }
}

TEST_CASE("plucker coordinates, d=1 and the 2x4 worked example") {
  auto p = normalize(from_rows({{3, 1, 4}}));
  auto pl = plucker(p);
  for (int j = 1; j <= 3; ++j) CHECK(pl.coords.at({j}) == p.X(0, j - 1));

  // X = [[1,0,a,b],[0,1,c,d]]
  long a = 2, b = -1, c = 3, d = 5;
  auto q = normalize(from_rows({{1, 0, a, b}, {0, 1, c, d}}));
  auto pq = plucker(q);
  CHECK(pq.coords.at({1, 2}) == Rational(1));
  CHECK(pq.coords.at({1, 3}) == Rational(c));
  CHECK(pq.coords.at({1, 4}) == Rational(d));
  CHECK(pq.coords.at({2, 3}) == Rational(-a));
  CHECK(pq.coords.at({2, 4}) == Rational(-b));
  CHECK(pq.coords.at({3, 4}) == Rational(a * d - b * c));
  CHECK(static_cast<int>(pq.coords.size()) == 6);  // C(4,2)
}

TEST_CASE("plucker projective invariance under transition") {
  for (int trial = 0; trial < 30; ++trial) {
    auto p = rand_point(5, 2);
    for (const auto& J : all_subsets(5, 2)) {
      bool skip = false, inv = false, scale_ok = false, unit_ok = false;
      try {
        auto q = transition(p, J);
        inv = plucker_equal(plucker(p), plucker(q));
        // The global scalar is P^I_J = det of the J-minor of p.
        Rational scale = detail::column_minor(p.X, J).det();
        scale_ok = plucker(p).coords.at(J) == scale;
        unit_ok = plucker(q).coords.at(J) == Rational(1);
      } catch (const OutsideOverlapError&) {
        skip = true;
      }
      if (!skip) {
        CHECK(inv);
        CHECK(scale_ok);
        CHECK(unit_ok);
      }
    }
  }
}

TEST_CASE("plucker relations hold for decomposable points and fail for a certified non-point") {
  for (int r : {4, 5, 6}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto p = rand_point(r, 2);
      CHECK(plucker_relation_check(plucker(p)));
    }
  }
  // p12 = p34 = 1, rest 0: 1*1 - 0 + 0 != 0.
  PluckerCoordinates<Rational> bad;
  bad.r = 4;
  bad.d = 2;
  for (const auto& K : all_subsets(4, 2)) bad.coords[K] = Rational(0);
  bad.coords[{1, 2}] = Rational(1);
  bad.coords[{3, 4}] = Rational(1);
  CHECK(!plucker_relation_check(bad));

  // d=2, r=3: no quadruples, vacuously true.
  auto small = rand_point(3, 2);
  CHECK(plucker_relation_check(plucker(small)));
}

TEST_CASE("universal bundle transition") {
  ChartPoint<Rational> p;
  p.r = 2;
  p.d = 1;
  p.chart = {1};
  p.X = from_rows({{1, 7}});
  CHECK(universal_bundle_transition(p, {1}) == Mat<Rational>::identity(1));
  auto g = universal_bundle_transition(p, {2});
  CHECK(g(0, 0) == Rational(1, 7));

  // det(g_{I,J}) * P^I_J = 1 on random Grass(4,2) points.
  for (int trial = 0; trial < 100; ++trial) {
    auto q = rand_point(4, 2);
    for (const auto& J : all_subsets(4, 2)) {
      bool skip = false, ok = false;
      try {
        Mat<Rational> gij = universal_bundle_transition(q, J);
        Rational pij = plucker(q).coords.at(J);
        ok = gij.det() * pij == Rational(1);
      } catch (const OutsideOverlapError&) {
        skip = true;
      }
      if (!skip) CHECK(ok);
    }
  }
}

TEST_CASE("bundle cocycle g_{I,K} = g_{I,J} * g_{J,K}") {
  for (int trial = 0; trial < 25; ++trial) {
    auto p = rand_point(4, 2);
    for (const auto& J : all_subsets(4, 2))
      for (const auto& K : all_subsets(4, 2)) {
        bool skip = false, ok = false;
        try {
          auto pJ = transition(p, J);
          Mat<Rational> gIJ = universal_bundle_transition(p, J);
          Mat<Rational> gJK = universal_bundle_transition(pJ, K);
          Mat<Rational> gIK = universal_bundle_transition(p, K);
          // (X^J_K)^{-1} (X^I_J)^{-1} = ((X^I_J)(X^J_K))^{-1} = (X^I_K)^{-1}.
          ok = gIK == gJK * gIJ;
        } catch (const OutsideOverlapError&) {
          skip = true;
        }
        if (!skip) CHECK(ok);
      }
  }
}

namespace {
RationalFunction rf(long c) { return RationalFunction(c); }
}  // namespace

TEST_CASE("dvr limit examples") {
  // M = [1, 1/t] -> J={2}, Xlim=[t,1], X0=[0,1]
  Mat<RationalFunction> m1(1, 2);
  m1(0, 0) = rf(1);
  m1(0, 1) = RationalFunction(UPoly::constant(Rational(1)), UPoly::t());
  auto l1 = dvr_limit(m1);
  CHECK(l1.chart == SubsetIndex{2});
  CHECK(l1.integral.X(0, 0) == RationalFunction::t());
  CHECK(l1.integral.X(0, 1) == rf(1));
  CHECK(l1.special_fiber.X(0, 0) == Rational(0));
  CHECK(l1.special_fiber.X(0, 1) == Rational(1));

  // M = [1, t]: already integral, J={1}
  Mat<RationalFunction> m2(1, 2);
  m2(0, 0) = rf(1);
  m2(0, 1) = RationalFunction::t();
  auto l2 = dvr_limit(m2);
  CHECK(l2.chart == SubsetIndex{1});
  CHECK(l2.integral.X == m2);
  CHECK(l2.special_fiber.X(0, 0) == Rational(1));
  CHECK(l2.special_fiber.X(0, 1) == Rational(0));

  // M = [[1,0,1/t],[0,1,1/t]] -> J={1,3} by the lex tie-break at valuation -1.
  RationalFunction inv_t(UPoly::constant(Rational(1)), UPoly::t());
  Mat<RationalFunction> m3(2, 3);
  m3(0, 0) = rf(1);
  m3(0, 2) = inv_t;
  m3(1, 1) = rf(1);
  m3(1, 2) = inv_t;
  // Minor oracle: nu(P12) = 0, nu(P13) = -1, nu(P23) = -1.
  CHECK(t_adic_valuation(detail::column_minor(m3, {1, 2}).det()) == 0);
  CHECK(t_adic_valuation(detail::column_minor(m3, {1, 3}).det()) == -1);
  CHECK(t_adic_valuation(detail::column_minor(m3, {2, 3}).det()) == -1);
  auto l3 = dvr_limit(m3);
  CHECK(l3.chart == SubsetIndex{1, 3});
  CHECK(l3.integral.X(0, 0) == rf(1));
  CHECK(l3.integral.X(0, 1) == rf(-1));
  CHECK(l3.integral.X(0, 2) == rf(0));
  CHECK(l3.integral.X(1, 0) == rf(0));
  CHECK(l3.integral.X(1, 1) == RationalFunction::t());
  CHECK(l3.integral.X(1, 2) == rf(1));
  CHECK(l3.special_fiber.X(1, 1) == Rational(0));
  CHECK(l3.special_fiber.X(1, 2) == Rational(1));

  Mat<RationalFunction> bad(2, 2);
  bad(0, 0) = rf(1);
  bad(0, 1) = rf(2);
  bad(1, 0) = rf(2);
  bad(1, 1) = rf(4);
  CHECK_THROWS_AS(dvr_limit(bad), RankDeficientError);
}

TEST_CASE("dvr limit on random matrices: integrality, generic fiber, idempotence") {
  auto rand_entry = []() {
    // Valuation in [-3,3]: t^v * (a+bt)/(c+dt) with a, c units.
    int v = rand_int(-3, 3);
    UPoly num{Rational(rand_nonzero_rational(3)), Rational(rand_int(-2, 2))};
    UPoly den{Rational(rand_nonzero_rational(3)), Rational(rand_int(-2, 2))};
    RationalFunction f(num, den);
    if (v >= 0) return f * RationalFunction::t(v);
    return f / RationalFunction::t(-v);
  };
  int done = 0;
  while (done < 50) {
    int d = rand_int(1, 3), r = rand_int(d + 1, d + 3);
    Mat<RationalFunction> m(d, r);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < r; ++j) m(i, j) = rand_entry();
    try {
      auto lim = dvr_limit(m);
      ++done;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < r; ++j) {
          auto v = t_adic_valuation(lim.integral.X(i, j));
          if (v) CHECK(*v >= 0);
        }
      // Generic fiber equals the input as a point of Grass(r,d)(Q(t)).
      CHECK(normalize(lim.integral.X) == normalize(m));
      // Idempotence: an integral point in a chart of valuation-0 minor is fixed.
      auto lim2 = dvr_limit(lim.integral.X);
      auto vmin = t_adic_valuation(detail::column_minor(lim.integral.X, lim.chart).det());
      if (vmin == 0) CHECK(lim2.integral.X == lim.integral.X);
    } catch (const RankDeficientError&) {
    }
  }
}

TEST_CASE("projective embedding separates sampled point pairs") {
  // Distinct normalized points must have projectively distinct Plucker
  // vectors (sampled injectivity of the embedding).
  for (auto [r, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto p = rand_point(r, d);
      auto q = rand_point(r, d);
      if (p == q) {
        CHECK(plucker_equal(plucker(p), plucker(q)));
      } else {
        CHECK(!plucker_equal(plucker(p), plucker(q)));
      }
    }
  }
}

TEST_CASE("GL_d-equivalence is decided by normalize, with Plucker cross-check") {
  for (int trial = 0; trial < 30; ++trial) {
    int d = rand_int(1, 3), r = rand_int(d + 1, d + 2);
    Mat<Rational> m = rand_matrix(d, r, 3);
    ChartPoint<Rational> p;
    try {
      p = normalize(m);
    } catch (const RankDeficientError&) {
      continue;
    }
    // Left-multiply by a random invertible d x d matrix.
    Mat<Rational> g(d, d);
    do {
      g = rand_matrix(d, d, 3);
    } while (g.det().is_zero());
    ChartPoint<Rational> q = normalize(g * m);
    CHECK(p == q);
    CHECK(plucker_equal(plucker(p), plucker(normalize(g * m))));
  }
}

TEST_CASE("chart dimension is d(r-d)") {
  for (int r = 2; r <= 5; ++r)
    for (int d = 1; d < r; ++d) {
      auto p = rand_point(r, d);
      // Free coordinates: entries outside the identity columns.
      int free_entries = p.d * (p.r - p.d);
      int fixed = static_cast<int>(p.chart.size()) * p.d;
      CHECK(free_entries == p.d * p.r - fixed);
    }
}
