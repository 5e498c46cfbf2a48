#include "quotkit/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quotkit {

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_[Expo(p.ring_->size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, int var, int power) {
  MultiPoly p(std::move(ring));
  Expo e(p.ring_->size(), 0);
  e.at(var) = power;
  p.terms_[e] = Rational(1);
  return p;
}

MultiPoly MultiPoly::monomial(RingPtr ring, Expo e, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (static_cast<int>(e.size()) != p.ring_->size())
    throw std::logic_error("MultiPoly::monomial: exponent length mismatch");
  if (!c.is_zero()) p.terms_[std::move(e)] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return ring_->total_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Expo(ring_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, ring_->total_degree(e));
  return d;
}

int MultiPoly::fiber_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, ring_->fiber_degree(e));
  return d;
}

bool MultiPoly::is_fiber_homogeneous() const {
  if (terms_.empty()) return true;
  int d = ring_->fiber_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (ring_->fiber_degree(e) != d) return false;
  return true;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_ring(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_ring(a.ring_, b.ring_);
  MultiPoly r(a.ring_);
  const int nv = a.ring_->size();
  Expo e(nv, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.ring_);
  for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Expo& m, const Rational& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  const int nv = ring_->size();
  for (const auto& [e, v] : terms_) {
    Expo ne(nv);
    for (int i = 0; i < nv; ++i) ne[i] = e[i] + m[i];
    r.terms_[std::move(ne)] = v * c;
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != ring_->size())
    throw std::logic_error("MultiPoly::evaluate: value count mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < ring_->size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::specialize_base(const std::vector<Rational>& base_values,
                                     const RingPtr& target) const {
  if (static_cast<int>(base_values.size()) != ring_->base_count())
    throw std::logic_error("specialize_base: value count mismatch");
  if (target->size() != ring_->fiber_count())
    throw std::logic_error("specialize_base: target ring size mismatch");
  MultiPoly r(target);
  const int nf = ring_->fiber_count();
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = nf; i < ring_->size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= base_values[i - nf];
    if (t.is_zero()) continue;
    Expo fe(e.begin(), e.begin() + nf);
    r.add_term(fe, t);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  check_same_ring(ring_, value.ring());
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    Expo rest = e;
    int k = rest[var];
    rest[var] = 0;
    MultiPoly t = MultiPoly::monomial(ring_, rest, c);
    for (int i = 0; i < k; ++i) t = t * value;
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::map_to_ring(const RingPtr& target) const {
  std::vector<int> where(ring_->size(), -1);
  for (int i = 0; i < ring_->size(); ++i) where[i] = target->index_of(ring_->name(i));
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    Expo ne(target->size(), 0);
    for (int i = 0; i < ring_->size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0)
        throw std::logic_error("map_to_ring: variable " + ring_->name(i) +
                               " has no counterpart in target ring");
      ne[where[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::map<Expo, MultiPoly> MultiPoly::collect_by_fiber_monomial(const RingPtr& base_ring) const {
  if (base_ring->size() != ring_->base_count())
    throw std::logic_error("collect_by_fiber_monomial: base ring size mismatch");
  std::map<Expo, MultiPoly> out;
  const int nf = ring_->fiber_count();
  for (const auto& [e, c] : terms_) {
    Expo fe(e.begin(), e.begin() + nf);
    Expo be(e.begin() + nf, e.end());
    auto [it, fresh] = out.try_emplace(fe, base_ring);
    it->second.add_term(be, c);
  }
  return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& o) const {
  check_same_ring(ring_, o.ring_);
  if (o.is_zero()) throw std::domain_error("divide_exact: division by zero");
  MultiPoly rem = *this;
  MultiPoly quot(ring_);
  // Divisor's trailing term under the map order serves as pivot; exactness of
  // the division guarantees the loop strictly shrinks rem.
  const Expo de = o.terms_.rbegin()->first;
  const Rational dc = o.terms_.rbegin()->second;
  const int nv = ring_->size();
  while (!rem.is_zero()) {
    const Expo re = rem.terms_.rbegin()->first;
    const Rational rc = rem.terms_.rbegin()->second;
    Expo q(nv);
    for (int i = 0; i < nv; ++i) {
      q[i] = re[i] - de[i];
      if (q[i] < 0) throw std::domain_error("divide_exact: not divisible");
    }
    Rational qc = rc / dc;
    quot.add_term(q, qc);
    rem -= o.times_monomial(q, qc);
    if (!rem.is_zero() && rem.terms_.rbegin()->first >= re)
      throw std::domain_error("divide_exact: not divisible");
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomial first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool has_vars = ring_->total_degree(e) > 0;
    if (!a.is_one() || !has_vars) os << a.str();
    bool star = !a.is_one() || !has_vars;
    for (int i = 0; i < ring_->size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      star = true;
      os << ring_->name(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace quotkit
