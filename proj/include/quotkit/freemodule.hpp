// Graded free modules over a polynomial ring and their elements.
//
// F = (+) S(a_i): the twist list determines the grading; the generator of
// component i sits in degree -a_i. Elements are dense vectors of polynomials,
// one per component. Terms are ordered position-over-term (lower component
// wins) with grevlex or lex on monomials.
#pragma once

#include <optional>
#include <vector>

#include "quotkit/multipoly.hpp"

namespace quotkit {

struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;  // F = (+) S(a_i)

  int rank() const { return static_cast<int>(twists.size()); }
  int gen_degree(int i) const { return -twists.at(i); }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.ring.get() == b.ring.get() && a.twists == b.twists;
  }

  // Degree-d monomial basis, as (component, exponent) pairs in a fixed order.
  std::vector<std::pair<int, Expo>> degree_basis(int d) const;
  int degree_dim(int d) const;
};

// Element of a free module.
using Vec = std::vector<MultiPoly>;

Vec zero_vec(const FreeModule& F);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rational& c);
Vec vec_times_poly(const Vec& a, const MultiPoly& p);
Vec vec_times_monomial(const Vec& a, const Expo& m, const Rational& c);

// Degree of a homogeneous element (max over terms if inhomogeneous);
// nullopt for zero.
std::optional<int> vec_degree(const FreeModule& F, const Vec& v);
bool vec_is_homogeneous(const FreeModule& F, const Vec& v);

enum class TermOrder { GrevLex, Lex };

struct ModTerm {
  int comp = -1;
  Expo mono;
  Rational coeff;
  bool valid() const { return comp >= 0; }
};

// Monomial comparison (fiber variables carry the grading for grevlex).
// Returns <0, 0, >0 like strcmp; "greater" means later in the order.
int mono_cmp(const RingPtr& ring, TermOrder ord, const Expo& a, const Expo& b);

// Position-over-term comparison of (comp, mono) pairs.
int term_cmp(const RingPtr& ring, TermOrder ord, int comp_a, const Expo& a, int comp_b,
             const Expo& b);

ModTerm leading_term(const RingPtr& ring, TermOrder ord, const Vec& v);

// Does (comp_a, a) divide (comp_b, b)? Requires equal components.
bool term_divides(int comp_a, const Expo& a, int comp_b, const Expo& b);

// All monomials of fiber-degree d in the ring, deterministic order.
std::vector<Expo> monomials_of_degree(const RingPtr& ring, int d);

std::string vec_str(const FreeModule& F, const Vec& v);

}  // namespace quotkit
