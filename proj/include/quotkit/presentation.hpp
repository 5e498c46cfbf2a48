// Graded module presentations M = F0 / <relations> and their invariants:
// minimal free resolutions, Betti tables, Hilbert function and polynomial,
// saturation, degreewise linear algebra.
#pragma once

#include <map>
#include <memory>

#include "quotkit/groebner.hpp"
#include "quotkit/matrix.hpp"
#include "quotkit/numpoly.hpp"

namespace quotkit {

struct Presentation {
  FreeModule F0;
  std::vector<Vec> relations;  // generators of the submodule U with M = F0/U

  // All relations must be homogeneous; throws otherwise.
  void validate() const;

  static Presentation free_module(const FreeModule& F);
  // S/(f1..fk) for an ideal in the ring.
  static Presentation cyclic(const RingPtr& ring, const std::vector<MultiPoly>& ideal_gens);
};

// Eliminates degree-zero (unit) entries so F0 becomes a minimal generator set.
Presentation minimize_presentation(const Presentation& P, TermOrder ord = TermOrder::GrevLex);

struct Resolution {
  // modules[0] = F0; maps[i] lists columns of d_{i+1} as elements of modules[i].
  std::vector<FreeModule> modules;
  std::vector<std::vector<Vec>> maps;

  int length() const { return static_cast<int>(modules.size()) - 1; }
};

// Minimal free resolution (minimal generators at every step).
Resolution free_resolution(const Presentation& P, TermOrder ord = TermOrder::GrevLex);

struct BettiTable {
  // (homological index i, internal degree j) -> beta_{i,j}
  std::map<std::pair<int, int>, int> beta;

  int max_degree() const;           // max j with some beta_{i,j} != 0
  int regularity_bound() const;     // max j - i over nonzero entries
  std::string str() const;
};

BettiTable betti_table(const Resolution& R);

// Cached degreewise view of a presentation. All queries are exact.
class GradedModule {
 public:
  GradedModule(Presentation P, TermOrder ord = TermOrder::GrevLex);

  const Presentation& pres() const { return pres_; }
  const FreeModule& F0() const { return pres_.F0; }
  const RingPtr& ring() const { return pres_.F0.ring; }
  TermOrder order() const { return ord_; }
  const GroebnerBasis& relations_gb() const { return gb_; }

  // dim_Q of the degree-d piece (standard monomial count).
  int hilbert_function(int d) const;

  // Standard monomial basis of the degree-d piece.
  const std::vector<std::pair<int, Expo>>& std_basis(int d) const;

  // Coordinates of the class of v (homogeneous of degree d) in std_basis(d).
  std::vector<Rational> coords(const Vec& v, int d) const;

  // Matrix of multiplication by the monomial mu from degree d to d + deg(mu).
  // Returned sparsely: for each source basis index, list of (target index,
  // coefficient).
  const std::vector<std::vector<std::pair<int, Rational>>>& mult_by_monomial(const Expo& mu,
                                                                             int d) const;

 private:
  Presentation pres_;
  TermOrder ord_;
  GroebnerBasis gb_;
  mutable std::map<int, std::vector<std::pair<int, Expo>>> basis_cache_;
  mutable std::map<int, std::map<std::pair<int, Expo>, int>> index_cache_;
  mutable std::map<std::pair<Expo, int>, std::vector<std::vector<std::pair<int, Rational>>>>
      mult_cache_;
};

using GradedModulePtr = std::shared_ptr<GradedModule>;

// Hilbert polynomial via the alternating sum over the minimal resolution,
// cross-checked against the Hilbert function in n+1 high degrees.
NumericalPolynomial hilbert_polynomial(const Presentation& P, TermOrder ord = TermOrder::GrevLex);

// Saturation with respect to the irrelevant ideal (x_0..x_n).
Presentation saturate(const Presentation& P, TermOrder ord = TermOrder::GrevLex);

// Restriction to the hyperplane x_last = l(x_0..x_{n-1}): substitutes and
// re-expresses over the ring without the last fiber variable.
Presentation restrict_to_hyperplane(const Presentation& P, const std::vector<Rational>& l_coeffs);

}  // namespace quotkit
