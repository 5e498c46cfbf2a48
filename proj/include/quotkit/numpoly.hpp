// Numerical (Hilbert) polynomials in the binomial basis.
//
// A NumericalPolynomial is f(r) = sum_i a_i * C(r, i) with integer a_i, the
// canonical form for integer-valued polynomials. C(r, i) is extended to all
// integer r by the falling factorial r(r-1)...(r-i+1)/i!.
#pragma once

#include <string>
#include <vector>

#include "quotkit/rational.hpp"

namespace quotkit {

class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  explicit NumericalPolynomial(std::vector<mpz_class> coeffs) : a_(std::move(coeffs)) { trim(); }
  static NumericalPolynomial constant(long c);

  bool is_zero() const { return a_.empty(); }
  int degree() const { return static_cast<int>(a_.size()) - 1; }  // -1 for zero
  const std::vector<mpz_class>& coeffs() const { return a_; }
  mpz_class coeff(int i) const { return i < static_cast<int>(a_.size()) ? a_[i] : mpz_class(0); }

  mpz_class evaluate(long r) const;

  friend NumericalPolynomial operator+(const NumericalPolynomial& f, const NumericalPolynomial& g);
  friend NumericalPolynomial operator-(const NumericalPolynomial& f, const NumericalPolynomial& g);
  friend NumericalPolynomial operator-(const NumericalPolynomial& f);
  friend bool operator==(const NumericalPolynomial& f, const NumericalPolynomial& g) {
    return f.a_ == g.a_;
  }
  friend bool operator!=(const NumericalPolynomial& f, const NumericalPolynomial& g) {
    return !(f == g);
  }

  std::string str() const;  // e.g. "2*C(r,1) + 1"

 private:
  void trim();
  std::vector<mpz_class> a_;
};

// The unique f of degree <= values.size()-1 with f(N+i) = values[i].
// Uses the forward-difference expansion, so the result is exact and integral.
NumericalPolynomial interpolate(const std::vector<mpz_class>& values, long N);

// g with g(r) = f(r) - f(r-1); degree drops by exactly one (or g = 0).
NumericalPolynomial hyperplane_restriction(const NumericalPolynomial& f);

enum class EventualOrder { Less, Equal, Greater };

// Compare f and g for all sufficiently large arguments (sign of the leading
// binomial coefficient of the difference).
EventualOrder eventual_compare(const NumericalPolynomial& f, const NumericalPolynomial& g);

// Hilbert polynomial of a linear P^r inside projective space: C(r + lambda, r).
NumericalPolynomial linear_hp(int r);

// Hilbert polynomial of a degree-d hypersurface in P^n:
// C(n + lambda, n) - C(n - d + lambda, n).
NumericalPolynomial hypersurface_hp(int n, int d);

// Helper: the degree-n polynomial lambda -> C(lambda + shift, n) in the
// binomial basis. Used for Hilbert polynomials of twisted free modules.
NumericalPolynomial binomial_shift_poly(int n, long shift);

}  // namespace quotkit
