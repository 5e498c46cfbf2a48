#include "quotkit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace quotkit {

Rational Rational::parse(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  if (v.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  }
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("Rational::to_int64: not an integer: " + str());
  mpz_class n = v_.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("Rational::to_int64: out of range: " + str());
  return static_cast<std::int64_t>(n.get_si());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

mpz_class binomial(long top, long k) { return binomial(mpz_class(top), k); }

mpz_class binomial(const mpz_class& top, long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  mpz_class den = 1;
  for (long i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  // The product of k consecutive integers is divisible by k!.
  return num / den;
}

}  // namespace quotkit
