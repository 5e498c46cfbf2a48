#include "quotkit/freemodule.hpp"

#include <sstream>
#include <stdexcept>

namespace quotkit {

std::vector<std::pair<int, Expo>> FreeModule::degree_basis(int d) const {
  std::vector<std::pair<int, Expo>> out;
  for (int i = 0; i < rank(); ++i) {
    int md = d + twists[i];
    if (md < 0) continue;
    for (auto& m : monomials_of_degree(ring, md)) out.emplace_back(i, m);
  }
  return out;
}

int FreeModule::degree_dim(int d) const {
  int total = 0;
  const int n = ring->fiber_count() - 1;
  for (int i = 0; i < rank(); ++i) {
    int md = d + twists[i];
    if (md < 0) continue;
    total += static_cast<int>(binomial(static_cast<long>(md) + n, n).get_si());
  }
  return total;
}

Vec zero_vec(const FreeModule& F) { return Vec(F.rank(), MultiPoly(F.ring)); }

bool vec_is_zero(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scaled(const Vec& a, const Rational& c) {
  Vec r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(p.scaled(c));
  return r;
}

Vec vec_times_poly(const Vec& a, const MultiPoly& p) {
  Vec r;
  r.reserve(a.size());
  for (const auto& q : a) r.push_back(q * p);
  return r;
}

Vec vec_times_monomial(const Vec& a, const Expo& m, const Rational& c) {
  Vec r;
  r.reserve(a.size());
  for (const auto& q : a) r.push_back(q.times_monomial(m, c));
  return r;
}

std::optional<int> vec_degree(const FreeModule& F, const Vec& v) {
  std::optional<int> d;
  for (int i = 0; i < F.rank(); ++i) {
    for (const auto& [e, c] : v[i].terms()) {
      int t = F.ring->fiber_degree(e) - F.twists[i];
      if (!d || t > *d) d = t;
    }
  }
  return d;
}

bool vec_is_homogeneous(const FreeModule& F, const Vec& v) {
  std::optional<int> d;
  for (int i = 0; i < F.rank(); ++i) {
    for (const auto& [e, c] : v[i].terms()) {
      int t = F.ring->fiber_degree(e) - F.twists[i];
      if (!d) d = t;
      if (t != *d) return false;
    }
  }
  return true;
}

int mono_cmp(const RingPtr& ring, TermOrder ord, const Expo& a, const Expo& b) {
  if (a == b) return 0;
  if (ord == TermOrder::Lex) {
    for (int i = 0; i < ring->size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  // Graded reverse lexicographic: compare total degree, then from the last
  // variable backwards; the smaller trailing exponent is the larger monomial.
  int da = ring->total_degree(a), db = ring->total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int i = ring->size() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int term_cmp(const RingPtr& ring, TermOrder ord, int comp_a, const Expo& a, int comp_b,
             const Expo& b) {
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;  // lower component wins
  return mono_cmp(ring, ord, a, b);
}

ModTerm leading_term(const RingPtr& ring, TermOrder ord, const Vec& v) {
  ModTerm best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& [e, c] : v[i].terms()) {
      if (!best.valid() || term_cmp(ring, ord, static_cast<int>(i), e, best.comp, best.mono) > 0) {
        best.comp = static_cast<int>(i);
        best.mono = e;
        best.coeff = c;
      }
    }
  }
  return best;
}

bool term_divides(int comp_a, const Expo& a, int comp_b, const Expo& b) {
  if (comp_a != comp_b) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {
void enumerate(const RingPtr& ring, int var, int remaining, Expo& cur, std::vector<Expo>& out) {
  const int nf = ring->fiber_count();
  if (var == nf - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[var] = k;
    enumerate(ring, var + 1, remaining - k, cur, out);
  }
  cur[var] = 0;
}
}  // namespace

std::vector<Expo> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Expo> out;
  if (d < 0) return out;
  if (ring->fiber_count() == 0) {
    if (d == 0) out.push_back(Expo(ring->size(), 0));
    return out;
  }
  Expo cur(ring->size(), 0);
  enumerate(ring, 0, d, cur, out);
  return out;
}

std::string vec_str(const FreeModule& F, const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < F.rank(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace quotkit
