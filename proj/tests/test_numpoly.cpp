#include <doctest.h>

#include "helpers.hpp"

using namespace quotkit;
using namespace qktest;

namespace {
NumericalPolynomial np(std::vector<long> a) {
  std::vector<mpz_class> c(a.begin(), a.end());
  return NumericalPolynomial(std::move(c));
}
}  // namespace

TEST_CASE("evaluate examples") {
  CHECK(np({1, 1}).evaluate(3) == 4);
  // Phi_2 at 3: C(5,2) = 10
  CHECK(linear_hp(2).evaluate(3) == 10);
  // C(-1,2) via falling factorial
  CHECK(np({0, 0, 1}).evaluate(-1) == 1);
}

TEST_CASE("interpolate examples with the binomial-system oracle") {
  CHECK(interpolate({1, 2}, 0) == np({1, 1}));
  CHECK(interpolate({1, 1, 1}, 5) == np({1}));

  std::vector<mpz_class> vals{1, 4, 10};
  NumericalPolynomial f = interpolate(vals, 1);
  CHECK(f.coeffs() == binomial_system_oracle(vals, 1));
  for (int i = 0; i < 3; ++i) CHECK(f.evaluate(1 + i) == vals[i]);
}

TEST_CASE("interpolate round-trips with evaluate") {
  for (int n = 0; n <= 8; ++n) {
    for (long N : {-7L, -1L, 0L, 3L, 11L}) {
      std::vector<mpz_class> vals;
      for (int i = 0; i <= n; ++i) vals.push_back(rand_int(-50, 50));
      NumericalPolynomial f = interpolate(vals, N);
      CHECK(f.degree() <= n);
      for (int i = 0; i <= n; ++i) CHECK(f.evaluate(N + i) == vals[i]);
    }
  }
}

TEST_CASE("hyperplane restriction examples and difference oracle") {
  CHECK(hyperplane_restriction(np({1, 1})) == np({1}));
  CHECK(hyperplane_restriction(np({7})).is_zero());
  CHECK(hyperplane_restriction(np({0, 0, 1})) == np({-1, 1}));

  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpz_class> coeffs;
    int deg = rand_int(0, 5);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rand_int(-9, 9));
    NumericalPolynomial f{std::vector<mpz_class>(coeffs)};
    NumericalPolynomial g = hyperplane_restriction(f);
    for (int r = -10; r <= 10; ++r) CHECK(g.evaluate(r) == f.evaluate(r) - f.evaluate(r - 1));
    if (!f.is_zero() && f.degree() >= 1) CHECK(g.degree() == f.degree() - 1);
    if (f.degree() <= 0) CHECK(g.is_zero());
  }
}

TEST_CASE("eventual compare examples") {
  CHECK(eventual_compare(np({5, 1}), np({0, 2})) == EventualOrder::Less);
  CHECK(eventual_compare(np({5, 1}), np({5, 1})) == EventualOrder::Equal);
  CHECK(eventual_compare(np({0, 0, 1}), np({100})) == EventualOrder::Greater);
}

TEST_CASE("eventual compare agrees with pointwise comparison past a searched threshold") {
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<mpz_class> ca, cb;
    for (int i = 0; i <= rand_int(0, 4); ++i) ca.push_back(rand_int(-5, 5));
    for (int i = 0; i <= rand_int(0, 4); ++i) cb.push_back(rand_int(-5, 5));
    NumericalPolynomial f{std::move(ca)}, g{std::move(cb)};
    EventualOrder ord = eventual_compare(f, g);
    // Search explicitly for a threshold after which the sign is constant.
    long R0 = 0;
    for (long r = 0; r <= 200; ++r) {
      int s = sgn(f.evaluate(r) - g.evaluate(r));
      int expected = ord == EventualOrder::Less ? -1 : (ord == EventualOrder::Greater ? 1 : 0);
      if (s != expected) R0 = r + 1;
    }
    REQUIRE(R0 <= 150);  // threshold exists well inside the scan
    for (long r = R0; r <= 200; ++r) {
      mpz_class diff = f.evaluate(r) - g.evaluate(r);
      switch (ord) {
        case EventualOrder::Less: CHECK(diff < 0); break;
        case EventualOrder::Equal: CHECK(diff == 0); break;
        case EventualOrder::Greater: CHECK(diff > 0); break;
      }
    }
  }
}

TEST_CASE("closed-form Hilbert polynomials") {
  CHECK(linear_hp(1) == np({1, 1}));
  CHECK(linear_hp(0) == np({1}));
  // C(2+l,2) - C(l,2) = 2l + 1; oracle: evaluate both binomials at l = 0, 1.
  NumericalPolynomial h22 = hypersurface_hp(2, 2);
  CHECK(h22 == np({1, 2}));
  CHECK(h22.evaluate(0) == binomial(2, 2) - binomial(0, 2));
  CHECK(h22.evaluate(1) == binomial(3, 2) - binomial(1, 2));
  CHECK_THROWS_AS(linear_hp(-1), std::invalid_argument);
  CHECK_THROWS_AS(hypersurface_hp(0, 2), std::invalid_argument);
}

TEST_CASE("integer-valuedness of binomial-basis evaluation") {
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<mpz_class> c;
    for (int i = 0; i <= rand_int(0, 6); ++i) c.push_back(rand_int(-20, 20));
    NumericalPolynomial f{std::move(c)};
    // The mpz API itself guarantees integrality; spot-check against the
    // rational falling-factorial formula.
    for (long r = -6; r <= 6; ++r) {
      Rational acc(0);
      for (int i = 0; i < static_cast<int>(f.coeffs().size()); ++i) {
        Rational term(1);
        for (int k = 0; k < i; ++k) term *= Rational(r - k, k + 1);
        acc += Rational(f.coeffs()[i]) * term;
      }
      CHECK(acc.is_integer());
      CHECK(acc.numerator() == f.evaluate(r));
    }
  }
}
