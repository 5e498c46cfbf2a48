#include <doctest.h>

#include "helpers.hpp"
#include "quotkit/quotgrass.hpp"
#include "quotkit/grassmann.hpp"
#include "quotkit/regularity.hpp"

using namespace quotkit;
using namespace qktest;

namespace {

MultiPoly var(const RingPtr& R, int i, int pow = 1) { return MultiPoly::variable(R, i, pow); }

// Uniform twist at which the embedding is valid: Mumford's bound applied to
// the kernel subsheaf of (+)^p O.
long embed_bound(const QuotientDatum& q) {
  NumericalPolynomial free_hp;
  for (int i = 0; i < q.p; ++i) free_hp = free_hp + binomial_shift_poly(q.n, q.n);
  return std::max(mumford_bound(q.p, q.n, free_hp - q.hp), 0L);
}

QuotientDatum point_on_p1() {
  RingPtr R = Ring::fiber("x", 2);
  FreeModule F{R, {0}};
  return make_quotient(1, R, {Vec{var(R, 0)}});
}

}  // namespace

TEST_CASE("grass point of the point-of-P1 quotient at r=1") {
  QuotientDatum q = point_on_p1();
  CHECK(q.hp == NumericalPolynomial::constant(1));
  GrassSectionPoint g = grass_point_of_quotient(q, 1);
  CHECK(g.ambient_dim == 2);
  REQUIRE(g.quotient.rows() == 1);
  // Basis (x0, x1): quotient matrix [0, 1], kernel spanned by (1, 0).
  CHECK(g.quotient(0, 0) == Rational(0));
  CHECK(g.quotient(0, 1) == Rational(1));
  REQUIRE(g.kernel_basis.size() == 1);
  CHECK(g.kernel_basis[0] == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("identity quotient at r=0 is the 1x1 identity") {
  RingPtr R = Ring::fiber("x", 2);
  QuotientDatum q = make_quotient(1, R, {});
  GrassSectionPoint g = grass_point_of_quotient(q, 0);
  CHECK(g.ambient_dim == 1);
  CHECK(g.quotient.rows() == 1);
  CHECK(g.quotient(0, 0) == Rational(1));
  CHECK(g.kernel_basis.empty());
}

TEST_CASE("point quotient at r=2: kernel is the degree-2 strand of (x0)") {
  QuotientDatum q = point_on_p1();
  GrassSectionPoint g = grass_point_of_quotient(q, 2);
  CHECK(g.ambient_dim == 3);
  // Basis (x0^2, x0 x1, x1^2): kernel (1,0,0), (0,1,0); quotient [0,0,1].
  REQUIRE(g.kernel_basis.size() == 2);
  CHECK(g.kernel_basis[0] == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(g.kernel_basis[1] == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
  CHECK(g.quotient(0, 2) == Rational(1));
}

TEST_CASE("regularity-too-low detection") {
  // S/(x0^2) on P^1 has Phi = 2 but dim at r=0 is 1.
  RingPtr R = Ring::fiber("x", 2);
  QuotientDatum q = make_quotient(1, R, {Vec{var(R, 0, 2)}});
  CHECK(q.hp == NumericalPolynomial::constant(2));
  CHECK_THROWS_AS(grass_point_of_quotient(q, 0), RegularityTooLowError);
  CHECK_NOTHROW(grass_point_of_quotient(q, 1));
}

TEST_CASE("roundtrip recover(embed) agrees in degrees >= r") {
  QuotientDatum q = point_on_p1();
  GrassSectionPoint g = grass_point_of_quotient(q, 1);
  QuotientDatum back = quotient_from_grass_point(g, q.ring());
  CHECK(quotients_agree(q, back, 1));
  // The saturated kernels coincide exactly: (x0) is saturated, and the
  // degree-1-generated recovery saturates back to it.
  CHECK(quotients_agree(q, back, 1, 3, /*saturated=*/true));
  // Exact equality of kernels for the identity quotient at r=0.
  RingPtr R = Ring::fiber("x", 2);
  QuotientDatum idq = make_quotient(1, R, {});
  GrassSectionPoint gi = grass_point_of_quotient(idq, 0);
  QuotientDatum idback = quotient_from_grass_point(gi, R);
  CHECK(idback.kernel_gb.elems == idq.kernel_gb.elems);
}

TEST_CASE("a kernel not arising from a flat Phi-quotient is caller-visible") {
  // Kernel spanned by x0 and x1 in ambient p=1, n=1, r=1: cokernel has
  // Hilbert polynomial 0, not the Phi(r)=0-compatible... the recorded
  // polynomial exposes the mismatch with any intended Phi of degree 0.
  RingPtr R = Ring::fiber("x", 2);
  GrassSectionPoint g;
  g.p = 1;
  g.n = 1;
  g.r = 1;
  g.ambient_dim = 2;
  g.quotient = Mat<Rational>(0, 2);
  g.kernel_basis = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  QuotientDatum q = quotient_from_grass_point(g, R);
  CHECK(q.hp.is_zero());  // the irrelevant-torsion cokernel dies as a sheaf
  CHECK(q.hp != NumericalPolynomial::constant(1));
}

TEST_CASE("roundtrip corpus on P1 and P2, rank law, strand dimension law") {
  std::vector<QuotientDatum> corpus;
  {
    RingPtr R = Ring::fiber("x", 2);  // P^1
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 0)}}));
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 1)}}));
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 0) + var(R, 1)}}));
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 0, 2)}}));
    corpus.push_back(make_quotient(1, R, {}));
    FreeModule F2{R, {0, 0}};
    Vec k1 = zero_vec(F2);
    k1[0] = var(R, 0);
    k1[1] = -var(R, 1);
    corpus.push_back(make_quotient(2, R, {k1}));
    Vec k2 = zero_vec(F2);
    k2[1] = MultiPoly::constant(R, 1);
    corpus.push_back(make_quotient(2, R, {k2}));
  }
  {
    RingPtr R = Ring::fiber("x", 3);  // P^2
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 1)}, Vec{var(R, 2)}}));
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 0)}}));
    corpus.push_back(make_quotient(1, R, {Vec{var(R, 0) * var(R, 1) - var(R, 2, 2)}}));
  }
  CHECK(corpus.size() >= 10);
  for (const auto& q : corpus) {
    // r at or above the uniform bound for this quotient's data.
    long r = embed_bound(q);
    GrassSectionPoint g = grass_point_of_quotient(q, static_cast<int>(r));
    // Rank law: ambient = p*C(n+r,n), quotient rank = Phi(r).
    CHECK(g.ambient_dim ==
          q.p * static_cast<int>(binomial(q.n + r, q.n).get_si()));
    CHECK(g.quotient.rows() == q.hp.evaluate(r));
    // Exact-diagram dimension law in every degree in [r, r+3].
    for (long e = r; e <= r + 3; ++e) {
      auto ks = kernel_strand(q, static_cast<int>(e));
      CHECK(static_cast<long>(ks.size()) + q.hp.evaluate(e) ==
            q.pres.F0.degree_dim(static_cast<int>(e)));
    }
    QuotientDatum back = quotient_from_grass_point(g, q.ring());
    CHECK(quotients_agree(q, back, static_cast<int>(r)));
  }
}

TEST_CASE("bridge to the chart atlas: normalize the quotient matrix") {
  QuotientDatum q = point_on_p1();
  GrassSectionPoint g = grass_point_of_quotient(q, 1);
  auto chart_point = normalize(g.quotient);
  CHECK(chart_point.r == g.ambient_dim);
  CHECK(chart_point.d == g.quotient.rows());
}

TEST_CASE("quot stratum over A^1: the three kernel-family examples") {
  RingPtr R = Ring::family("x", 2, "y", 1);
  MultiPoly one = MultiPoly::constant(R, 1);
  MultiPoly y = var(R, 2);
  RingPtr B = R->base_subring();

  SUBCASE("kernel (1, y): Phi = 1 fills the base; Phi = lambda+1 is empty") {
    std::vector<std::vector<MultiPoly>> fam{{one, y}};
    auto s = quot_stratum(1, 1, 1, fam, NumericalPolynomial::constant(1), 1, 6);
    CHECK(s.closed.gens.empty());
    for (long v = -3; v <= 3; ++v) CHECK(s.contains_point({Rational(v)}));

    auto e = quot_stratum(1, 1, 1, fam, interpolate({2, 3}, 1), 1, 6);
    CHECK(ideal_is_unit(e.closed));
  }

  SUBCASE("kernel (y, y): Phi = 1 off V(y), Phi = lambda+1 on V(y)") {
    std::vector<std::vector<MultiPoly>> fam{{y, y}};
    auto s1 = quot_stratum(1, 1, 1, fam, NumericalPolynomial::constant(1), 1, 6);
    for (long v = -3; v <= 3; ++v) CHECK(s1.contains_point({Rational(v)}) == (v != 0));
    auto s2 = quot_stratum(1, 1, 1, fam, interpolate({2, 3}, 1), 1, 6);
    CHECK(ideal_equal(s2.closed, Ideal{B, {var(B, 0)}}));
    for (long v = -3; v <= 3; ++v) CHECK(s2.contains_point({Rational(v)}) == (v == 0));
  }
}

TEST_CASE("quot stratum over a point base agrees with the direct check") {
  // Base = A^0 (no y variables): the family is a single quotient.
  RingPtr R = Ring::family("x", 2, "y", 0);
  MultiPoly one = MultiPoly::constant(R, 1);
  std::vector<std::vector<MultiPoly>> fam{{one, MultiPoly(R)}};  // kernel (1,0) = x0
  auto s = quot_stratum(1, 1, 1, fam, NumericalPolynomial::constant(1), 1, 6);
  CHECK(!ideal_is_unit(s.closed));
  CHECK(s.contains_point({}));

  auto e = quot_stratum(1, 1, 1, fam, NumericalPolynomial::constant(2), 1, 6);
  CHECK(ideal_is_unit(e.closed));
}
