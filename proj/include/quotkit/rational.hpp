// Exact rational arithmetic for quotkit.
//
// Rational wraps a GMP mpq under a fixed canonical form: reduced fraction,
// positive denominator. Every algorithm in this library relies on exact
// equality of values, so nothing here may ever round.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace quotkit {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, literals abound
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Parses "123", "-4/7". Throws std::invalid_argument on bad syntax.
  static Rational parse(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // Exact conversion; throws std::domain_error if not an integer or out of range.
  std::int64_t to_int64() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// Integer arithmetic helpers shared across modules.

// C(top, k) for arbitrary integer top (falling-factorial extension):
// top*(top-1)*...*(top-k+1)/k!. Defined for k >= 0; returns 0 for k < 0.
mpz_class binomial(long top, long k);

// C(top, k) where top itself is a big integer.
mpz_class binomial(const mpz_class& top, long k);

}  // namespace quotkit
