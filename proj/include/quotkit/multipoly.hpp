// Sparse multivariate polynomials with exact rational coefficients.
//
// Terms are kept in a std::map keyed by exponent vector, so every polynomial
// has one canonical representation and equality is structural. No zero
// coefficient is ever stored.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "quotkit/rational.hpp"
#include "quotkit/ring.hpp"

namespace quotkit {

class MultiPoly {
 public:
  using TermMap = std::map<Expo, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, int var, int power = 1);
  static MultiPoly monomial(RingPtr ring, Expo e, const Rational& c = Rational(1));

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_constant() const;
  // The coefficient of the constant monomial (zero if absent).
  Rational constant_term() const;

  // Max total degree over all variables; -1 for the zero polynomial.
  int total_degree() const;
  // Max degree in the fiber variables; -1 for zero.
  int fiber_degree() const;
  // True if every term has the same fiber degree (zero counts as homogeneous).
  bool is_fiber_homogeneous() const;

  void add_term(const Expo& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Expo& e, const Rational& c = Rational(1)) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Full evaluation; values indexed by ring variable.
  Rational evaluate(const std::vector<Rational>& values) const;

  // Substitute every base variable by the given rational value, producing a
  // polynomial in the target ring (fiber variables only). Target must have the
  // same fiber variable names in the same order.
  MultiPoly specialize_base(const std::vector<Rational>& base_values,
                            const RingPtr& target) const;

  // Substitute variable `var` by the polynomial `value` (same ring).
  MultiPoly substitute(int var, const MultiPoly& value) const;

  // Reinterpret in `target`, matching variables by name; throws if a variable
  // with a nonzero exponent has no counterpart.
  MultiPoly map_to_ring(const RingPtr& target) const;

  // Group terms by their fiber-variable part: returns (fiber exponent
  // restricted to fiber slots) -> coefficient polynomial in base variables
  // (expressed in base_ring = ring()->base_subring()).
  std::map<Expo, MultiPoly> collect_by_fiber_monomial(const RingPtr& base_ring) const;

  // Exact division: requires o | *this termwise-exactly; throws otherwise.
  MultiPoly divide_exact(const MultiPoly& o) const;

  std::string str() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

}  // namespace quotkit
