#include "quotkit/numpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quotkit {

void NumericalPolynomial::trim() {
  while (!a_.empty() && a_.back() == 0) a_.pop_back();
}

NumericalPolynomial NumericalPolynomial::constant(long c) {
  return NumericalPolynomial(std::vector<mpz_class>{mpz_class(c)});
}

mpz_class NumericalPolynomial::evaluate(long r) const {
  mpz_class acc = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) acc += a_[i] * binomial(r, static_cast<long>(i));
  return acc;
}

NumericalPolynomial operator+(const NumericalPolynomial& f, const NumericalPolynomial& g) {
  std::vector<mpz_class> c(std::max(f.a_.size(), g.a_.size()), mpz_class(0));
  for (std::size_t i = 0; i < f.a_.size(); ++i) c[i] += f.a_[i];
  for (std::size_t i = 0; i < g.a_.size(); ++i) c[i] += g.a_[i];
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial operator-(const NumericalPolynomial& f, const NumericalPolynomial& g) {
  return f + (-g);
}

NumericalPolynomial operator-(const NumericalPolynomial& f) {
  std::vector<mpz_class> c(f.a_.size());
  for (std::size_t i = 0; i < f.a_.size(); ++i) c[i] = -f.a_[i];
  return NumericalPolynomial(std::move(c));
}

std::string NumericalPolynomial::str() const {
  if (a_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpz_class c = a_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "C(r," << i << ")";
    }
  }
  return os.str();
}

NumericalPolynomial interpolate(const std::vector<mpz_class>& values, long N) {
  // Newton forward differences at N, then Chu-Vandermonde re-centering:
  // f(lambda) = sum_k d_k * C(lambda - N, k),
  // C(lambda - N, k) = sum_i C(lambda, i) * C(-N, k - i).
  const int n = static_cast<int>(values.size());
  std::vector<mpz_class> diff = values;
  std::vector<mpz_class> d(n);
  for (int k = 0; k < n; ++k) {
    d[k] = diff[0];
    for (int i = 0; i + 1 < n - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  std::vector<mpz_class> a(n, mpz_class(0));
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) a[i] += d[k] * binomial(-N, k - i);
  return NumericalPolynomial(std::move(a));
}

NumericalPolynomial hyperplane_restriction(const NumericalPolynomial& f) {
  // C(r,i) - C(r-1,i) = C(r-1,i-1) and C(r-1,j) = sum_i C(r,i)*(-1)^(j-i).
  const auto& a = f.coeffs();
  const int n = static_cast<int>(a.size());
  if (n <= 1) return NumericalPolynomial();
  std::vector<mpz_class> b(n - 1, mpz_class(0));
  for (int i = 0; i < n - 1; ++i)
    for (int j = i; j < n - 1; ++j) b[i] += ((j - i) % 2 == 0 ? a[j + 1] : -a[j + 1]);
  return NumericalPolynomial(std::move(b));
}

EventualOrder eventual_compare(const NumericalPolynomial& f, const NumericalPolynomial& g) {
  NumericalPolynomial d = f - g;
  if (d.is_zero()) return EventualOrder::Equal;
  return d.coeffs().back() > 0 ? EventualOrder::Greater : EventualOrder::Less;
}

NumericalPolynomial binomial_shift_poly(int n, long shift) {
  if (n < 0) throw std::invalid_argument("binomial_shift_poly: negative degree");
  std::vector<mpz_class> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = binomial(shift, n - i);
  return NumericalPolynomial(std::move(a));
}

NumericalPolynomial linear_hp(int r) {
  if (r < 0) throw std::invalid_argument("linear_hp: r must be >= 0");
  return binomial_shift_poly(r, r);
}

NumericalPolynomial hypersurface_hp(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("hypersurface_hp: need n >= 1, d >= 1");
  return binomial_shift_poly(n, n) - binomial_shift_poly(n, n - d);
}

}  // namespace quotkit
