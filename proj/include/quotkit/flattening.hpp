// Fitting-ideal rank stratification over an affine base and the full
// Hilbert-polynomial flattening stratification for families on P^n_S.
//
// A family is a presentation over Q[y][x], graded in x only. Strata are
// locally closed loci in the base: a closed ideal minus a union of closed
// ideals, with an attached rank or Hilbert polynomial.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotkit/numpoly.hpp"
#include "quotkit/polymatrix.hpp"
#include "quotkit/presentation.hpp"

namespace quotkit {

struct Ideal {
  RingPtr ring;
  std::vector<MultiPoly> gens;

  static Ideal zero(RingPtr r) { return Ideal{std::move(r), {}}; }
  static Ideal unit(RingPtr r);
};

// Reduced Groebner basis of the ideal (gens kept as given; this canonicalizes).
std::vector<MultiPoly> ideal_gb(const Ideal& I, TermOrder ord = TermOrder::GrevLex);
bool ideal_is_unit(const Ideal& I, TermOrder ord = TermOrder::GrevLex);
bool ideal_equal(const Ideal& a, const Ideal& b, TermOrder ord = TermOrder::GrevLex);
// f in radical(I), via the Rabinowitsch trick in an extended ring.
bool in_radical(const MultiPoly& f, const Ideal& I, TermOrder ord = TermOrder::GrevLex);
bool vanishes_at(const Ideal& I, const std::vector<Rational>& point);

struct StratumDescriptor {
  std::optional<int> rank_label;                 // n = 0 case
  std::optional<NumericalPolynomial> hp_label;   // general case
  Ideal closed;
  std::vector<Ideal> excluded;  // stratum = V(closed) minus union V(excluded)
  bool refine_capped = false;

  bool contains_point(const std::vector<Rational>& y) const;
};

// Ideal of (e-k) x (e-k) minors of psi; the locus where the fiber dimension
// of coker(psi) is >= k+1. k = e gives the unit ideal (empty minor), sizes
// beyond min(e, m) give the zero ideal.
Ideal fitting_ideal(const PolyMatrix& psi, int k);

// Stratification of the base by fiber dimension of coker(psi).
std::vector<StratumDescriptor> rank_strata(const PolyMatrix& psi,
                                           TermOrder ord = TermOrder::GrevLex);

// A maximal-size nonvanishing minor f (first in lexicographic subset order)
// witnessing the generic rank; coker is locally free of rank e - size(f) on
// D(f). The zero matrix yields f = 1.
struct GenericFreeLocus {
  MultiPoly witness;
  int rank = 0;
};
GenericFreeLocus generic_free_locus(const PolyMatrix& psi);

// Families on P^n over an affine base.
struct FamilyPresentation {
  FreeModule F0;               // over the family ring Q[x..][y..]
  std::vector<Vec> relations;  // x-homogeneous columns

  void validate() const;
  RingPtr family_ring() const { return F0.ring; }
  // The fiber module at a rational base point, over the fiber-only ring.
  Presentation specialize(const std::vector<Rational>& y) const;
};

// Degree-d strand as a presentation over the base ring: rows are indexed by
// the degree-d x-monomial basis of F0, columns by x-monomial multiples of the
// relations landing in degree d.
struct StrandPresentation {
  PolyMatrix psi;                               // e x m over the base ring
  std::vector<std::pair<int, Expo>> row_basis;  // family-ring labels of the rows
};
StrandPresentation strand_presentation(const FamilyPresentation& F, int d);

struct StratificationResult {
  std::vector<StratumDescriptor> strata;
  bool refine_capped = false;
  int last_strand = 0;  // highest strand degree inspected
};

// Iterated rank stratification of the strands d = N..N+n, labels converted to
// Hilbert polynomials, each stratum ideal then thickened with fitting ideals
// of higher strands until the Groebner basis stabilizes twice in a row or
// refine_cap extra strands have been used.
StratificationResult hilbert_stratification(const FamilyPresentation& F, int N, int refine_cap,
                                            TermOrder ord = TermOrder::GrevLex);

// Sampled validator for the caller-supplied N (whose fiberwise-regularity
// validity is otherwise undecidable): true iff each sample point lies in
// exactly one stratum and the specialized fiber's Hilbert polynomial equals
// that stratum's label. An N below some fiber's regularity shows up here as
// a label mismatch.
bool validate_stratification(const FamilyPresentation& F, const StratificationResult& res,
                             const std::vector<std::vector<Rational>>& sample_points,
                             TermOrder ord = TermOrder::GrevLex);

}  // namespace quotkit
