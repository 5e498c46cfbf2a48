// Embedding quotients of (+)^p O_{P^n} into a Grassmannian of degree-r
// sections, and the inverse cokernel construction.
#pragma once

#include "quotkit/flattening.hpp"
#include "quotkit/matrix.hpp"
#include "quotkit/presentation.hpp"

namespace quotkit {

// A quotient q: (+)^p S -> F with kernel recorded as a Groebner basis.
struct QuotientDatum {
  int p = 0, n = 0;
  Presentation pres;        // presentation of F = coker(kernel)
  GroebnerBasis kernel_gb;  // GB of ker q inside (+)^p S
  NumericalPolynomial hp;   // Hilbert polynomial of F

  RingPtr ring() const { return pres.F0.ring; }
};

// Build the datum from kernel generators inside (+)^p S.
QuotientDatum make_quotient(int p, const RingPtr& ring, const std::vector<Vec>& kernel_gens,
                            TermOrder ord = TermOrder::GrevLex);

// A point of Grass(p*C(n+r,n), Phi(r)) given by explicit bases. The ambient
// basis is the degree-r monomial basis of (+)^p S, component-major.
struct GrassSectionPoint {
  int p = 0, n = 0, r = 0;
  int ambient_dim = 0;
  Mat<Rational> quotient;                            // Phi(r) x ambient, full row rank
  std::vector<std::vector<Rational>> kernel_basis;   // reduced row echelon basis
};

// The degree-r strand of the surjection. Throws RegularityTooLowError when
// the strand rank differs from Phi(r) (r below the regularity of F or ker q).
GrassSectionPoint grass_point_of_quotient(const QuotientDatum& q, int r,
                                          TermOrder ord = TermOrder::GrevLex);

// Cokernel construction: the submodule generated by the kernel vectors placed
// in degree r, with its quotient.
QuotientDatum quotient_from_grass_point(const GrassSectionPoint& g, const RingPtr& ring,
                                        TermOrder ord = TermOrder::GrevLex);

// Kernel strand of the quotient in degree e, as a reduced row echelon basis
// over the degree-e monomial basis of (+)^p S.
std::vector<std::vector<Rational>> kernel_strand(const QuotientDatum& q, int e);

// Degreewise agreement of two quotients of the same (+)^p S in degrees
// [r, r+window]: equality of kernel strands (two quotients are equivalent
// exactly when their kernels agree). With saturated = true the saturations of
// the two kernels are additionally required to coincide exactly.
bool quotients_agree(const QuotientDatum& a, const QuotientDatum& b, int r, int window = 3,
                     bool saturated = false);

// The Quot stratum over an affine base: kernel_family lists spanning vectors
// of the degree-r kernel with entries in Q[y] (ambient coordinates,
// component-major). Returns the stratum of the family cokernel labeled phi;
// when no stratum carries that label the result has the unit closed ideal.
StratumDescriptor quot_stratum(int p, int n, int r,
                               const std::vector<std::vector<MultiPoly>>& kernel_family,
                               const NumericalPolynomial& phi, int N, int refine_cap,
                               TermOrder ord = TermOrder::GrevLex);

}  // namespace quotkit
