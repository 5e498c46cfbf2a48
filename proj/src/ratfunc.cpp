#include "quotkit/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace quotkit {

UPoly UPoly::t(int power) {
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = Rational(1);
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UPoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

int UPoly::order_at_zero() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  throw std::logic_error("UPoly::order_at_zero on zero polynomial");
}

Rational UPoly::at(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator-(const UPoly& a) {
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = -a.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size(), Rational(0));
  const int dd = d.degree();
  const Rational lead = d.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] / lead;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

namespace {

// Integer image of a rational polynomial: coefficients scaled to a primitive
// integer vector. Keeps the primitive pseudo-remainder sequence below small.
std::vector<mpz_class> primitive_integer_coeffs(const UPoly& p) {
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.denominator();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (den_lcm / c.denominator());
    out.push_back(v);
    content = gcd(content, v);
  }
  if (content > 1)
    for (auto& v : out) v /= content;
  return out;
}

void make_primitive(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  mpz_class content = 0;
  for (const auto& c : v) content = gcd(content, c);
  if (content > 1)
    for (auto& c : v) c /= content;
}

}  // namespace

UPoly UPoly::gcd(UPoly a0, UPoly b0) {
  if (a0.is_zero() && b0.is_zero()) return UPoly();
  if (a0.is_zero() || b0.is_zero()) {
    UPoly g = a0.is_zero() ? b0 : a0;
    return g.scaled(g.leading().inverse());
  }
  std::vector<mpz_class> a = primitive_integer_coeffs(a0);
  std::vector<mpz_class> b = primitive_integer_coeffs(b0);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // Primitive pseudo-remainder of a by b: r <- lc(b)*r - r_top*x^k*b.
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    const mpz_class lead = b.back();
    std::vector<mpz_class> r = a;
    for (int k = da - db; k >= 0; --k) {
      mpz_class top = r[db + k];
      for (auto& c : r) c *= lead;
      for (int j = 0; j <= db; ++j) r[k + j] -= top * b[j];
    }
    r.resize(db);  // deg(prem) < deg(b)
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rational> g;
  g.reserve(a.size());
  for (const auto& c : a) g.push_back(Rational(c));
  UPoly out{std::move(g)};
  return out.scaled(out.leading().inverse());
}

UPoly UPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return UPoly();
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return UPoly(std::move(c));
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational a = c_[i];
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly::constant(Rational(1));
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UPoly q, r;
    num_.divmod(g, q, r);
    num_ = q;
    den_.divmod(g, q, r);
    den_ = q;
  }
  Rational lead = den_.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r;
  r.num_ = -a.num_;
  r.den_ = a.den_;
  return r;
}

Rational RationalFunction::at_zero() const {
  Rational d0 = den_.coeff(0);
  if (d0.is_zero()) throw std::domain_error("RationalFunction: pole at t = 0");
  return num_.coeff(0) / d0;
}

std::string RationalFunction::str() const {
  if (den_ == UPoly::constant(Rational(1))) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  if (num_.degree() > 0) n = "(" + n + ")";
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

std::optional<long> t_adic_valuation(const RationalFunction& f) {
  if (f.is_zero()) return std::nullopt;
  return static_cast<long>(f.numerator().order_at_zero()) -
         static_cast<long>(f.denominator().order_at_zero());
}

}  // namespace quotkit
