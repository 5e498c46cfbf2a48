// Sheaf cohomology on P^n via Cech complexes on the standard cover, plus
// Castelnuovo-Mumford regularity and Mumford's recursive bound.
//
// The degree-d strand of the localized Cech complex is modelled at a finite
// truncation exponent k (an element m / x_J^k is represented by m). Raising k
// filters up to the true localization; dimensions are accepted once two
// consecutive stabilization checks agree.
#pragma once

#include <map>
#include <vector>

#include "quotkit/errors.hpp"
#include "quotkit/numpoly.hpp"
#include "quotkit/presentation.hpp"

namespace quotkit {

struct CohomologyTable {
  int n = 0;                              // ambient projective dimension
  std::map<std::pair<int, int>, int> h;   // (i, d) -> dim H^i(M~(d))
};

struct CastelnuovoResult {
  bool mult_surjective = false;
  bool globally_generated = false;
  bool higher_vanishing = false;
  bool all() const { return mult_surjective && globally_generated && higher_vanishing; }
};

class CohomologyEngine {
 public:
  explicit CohomologyEngine(GradedModulePtr M, int cech_cap = 20);

  const GradedModule& module() const { return *M_; }
  int n() const { return n_; }

  // dim H^i(P^n, M~(d)); exact, cached.
  int h(int i, int d);

  CohomologyTable table(int d_lo, int d_hi);

  // H^i(M~(m - i)) = 0 for all 1 <= i <= n.
  bool is_m_regular(int m);

  // Least m with is_m_regular(m). Search starts at the Betti-table bound and
  // walks down; throws PreconditionError for the zero sheaf and if no minimal
  // m exists in a generous window below the start (finite-support sheaves are
  // m-regular for every m).
  int regularity();

  // Castelnuovo lemma checks at twist r.
  CastelnuovoResult castelnuovo_checks(int r);

  // Upper bound used to start the regularity search.
  int betti_start();

 private:
  friend struct CechProbe;
  // h^0..h^n of the truncated complex at exponent k.
  std::vector<int> column_at_level(int d, int k) const;
  // Stabilized column: accepted when two consecutive agreement checks pass
  // and the alternating sum matches the Hilbert polynomial at d.
  void stabilize_column(int d);
  // Basis of ker(C^0 -> C^1) at truncation k, as dense coordinate vectors over
  // the concatenated summand bases of C^0.
  std::vector<std::vector<Rational>> h0_kernel(int d, int k) const;

  GradedModulePtr M_;
  int n_;
  int cap_;
  std::map<std::pair<int, int>, std::pair<int, int>> cache_;  // (i,d) -> (h, k)
  std::optional<int> betti_start_;
  std::optional<NumericalPolynomial> hp_;
  std::optional<BettiTable> sat_betti_;
  GradedModulePtr saturated_;

  const NumericalPolynomial& hp();
};

// Mumford's recursion F_{p,n}: base case F_{p,0} = 0; otherwise
// m0 = F_{p,n-1}(restriction coefficients) and the result is
// m0 + max(0, p*C(n+m0, n) - a(m0)). Throws DegreeTooHighError when
// deg(a) > n.
long mumford_bound(int p, int n, const NumericalPolynomial& a);

// Exact rank of a sparse matrix over Q (rows as sparse maps).
int sparse_rank(std::vector<std::map<int, Rational>> rows);

}  // namespace quotkit
