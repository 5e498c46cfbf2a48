// The field Q(t) and the t-adic valuation.
//
// RationalFunction is stored reduced (gcd of numerator and denominator is 1)
// with a monic denominator, so equality is structural and the valuation at
// t = 0 can be read off the trailing coefficients.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotkit/rational.hpp"

namespace quotkit {

// Dense univariate polynomial over Q in the variable t.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
  explicit UPoly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly t(int power = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  // Index of the lowest nonzero coefficient (order of vanishing at t=0).
  // Undefined for zero; callers must check is_zero first.
  int order_at_zero() const;

  Rational at(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;

  static UPoly gcd(UPoly a, UPoly b);  // monic gcd; gcd(0,0) = 0

  UPoly scaled(const Rational& s) const;
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[i] is the coefficient of t^i
};

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UPoly::constant(Rational(1))) {}
  RationalFunction(long n) : RationalFunction(UPoly::constant(Rational(n))) {}  // NOLINT
  explicit RationalFunction(const Rational& c) : RationalFunction(UPoly::constant(c)) {}
  explicit RationalFunction(UPoly num) : num_(std::move(num)), den_(UPoly::constant(Rational(1))) {}
  RationalFunction(UPoly num, UPoly den);

  static RationalFunction t(int power = 1) { return RationalFunction(UPoly::t(power)); }

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Value at t = 0; throws std::domain_error when the valuation is negative.
  Rational at_zero() const;

  std::string str() const;

 private:
  UPoly num_, den_;
};

// nu(f): order of vanishing of num at t=0 minus that of den; nullopt is +infinity.
std::optional<long> t_adic_valuation(const RationalFunction& f);

}  // namespace quotkit
