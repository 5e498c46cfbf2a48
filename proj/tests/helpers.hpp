// Shared test utilities: deterministic RNG, random exact values, and the
// independent linear-algebra oracles the module tests check against.
#pragma once

#include <random>
#include <vector>

#include "quotkit/matrix.hpp"
#include "quotkit/multipoly.hpp"
#include "quotkit/numpoly.hpp"
#include "quotkit/freemodule.hpp"

namespace qktest {

using namespace quotkit;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline int rand_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

inline Rational rand_rational(int span = 6) {
  int num = rand_int(-span, span);
  int den = rand_int(1, span);
  return Rational(num, den);
}

inline Rational rand_nonzero_rational(int span = 6) {
  Rational r = rand_rational(span);
  while (r.is_zero()) r = rand_rational(span);
  return r;
}

inline Mat<Rational> rand_matrix(int rows, int cols, int span = 4) {
  Mat<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(rand_int(-span, span));
  return m;
}

inline MultiPoly rand_poly(const RingPtr& ring, int max_deg, int terms, int span = 4) {
  MultiPoly p(ring);
  for (int t = 0; t < terms; ++t) {
    Expo e(ring->size(), 0);
    int budget = rand_int(0, max_deg);
    for (int i = 0; i < ring->size() && budget > 0; ++i) {
      e[i] = rand_int(0, budget);
      budget -= e[i];
    }
    p.add_term(e, Rational(rand_int(-span, span)));
  }
  return p;
}

// Independent oracle: solve sum_i a_i C(N+j, i) = values[j] exactly by
// Gaussian elimination and return the coefficients.
inline std::vector<mpz_class> binomial_system_oracle(const std::vector<mpz_class>& values,
                                                     long N) {
  const int n = static_cast<int>(values.size());
  Mat<Rational> A(n, n + 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) A(j, i) = Rational(binomial(N + j, i));
    A(j, n) = Rational(values[j]);
  }
  A.rref();
  std::vector<mpz_class> out(n);
  for (int i = 0; i < n; ++i) {
    Rational v = A(i, n);
    if (!v.is_integer()) throw std::logic_error("binomial system oracle: non-integer solution");
    out[i] = v.numerator();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree-d span of monomial multiples of module elements, as a dense matrix
// over the degree-d basis of F. Independent of the Groebner machinery.
inline Mat<Rational> strand_matrix(const FreeModule& F, const std::vector<Vec>& gens, int d) {
  auto basis = F.degree_basis(d);
  std::map<std::pair<int, Expo>, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    auto dg = vec_degree(F, g);
    if (!dg || *dg > d) continue;
    for (const auto& mu : monomials_of_degree(F.ring, d - *dg)) {
      std::vector<Rational> row(basis.size(), Rational(0));
      for (int c = 0; c < F.rank(); ++c)
        for (const auto& [e, coeff] : g[c].terms()) {
          Expo full(e.size());
          for (std::size_t i = 0; i < e.size(); ++i) full[i] = e[i] + mu[i];
          row[idx.at({c, full})] = coeff;
        }
      rows.push_back(std::move(row));
    }
  }
  Mat<Rational> m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

}  // namespace qktest
