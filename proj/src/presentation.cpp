#include "quotkit/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quotkit {

void Presentation::validate() const {
  for (const auto& rel : relations) {
    if (static_cast<int>(rel.size()) != F0.rank())
      throw std::logic_error("Presentation: relation rank mismatch");
    if (!vec_is_homogeneous(F0, rel))
      throw std::logic_error("Presentation: inhomogeneous relation " + vec_str(F0, rel));
  }
}

Presentation Presentation::free_module(const FreeModule& F) { return Presentation{F, {}}; }

Presentation Presentation::cyclic(const RingPtr& ring, const std::vector<MultiPoly>& ideal_gens) {
  Presentation P;
  P.F0 = FreeModule{ring, {0}};
  for (const auto& f : ideal_gens) {
    if (f.is_zero()) continue;
    P.relations.push_back(Vec{f});
  }
  P.validate();
  return P;
}

Presentation minimize_presentation(const Presentation& P, TermOrder) {
  FreeModule F = P.F0;
  std::vector<Vec> rels;
  for (const auto& r : P.relations)
    if (!vec_is_zero(r)) rels.push_back(r);

  while (true) {
    int rel_idx = -1, comp_idx = -1;
    Rational unit;
    for (std::size_t r = 0; r < rels.size() && rel_idx < 0; ++r) {
      for (int c = 0; c < F.rank(); ++c) {
        const MultiPoly& entry = rels[r][c];
        if (!entry.is_zero() && entry.is_constant()) {
          rel_idx = static_cast<int>(r);
          comp_idx = c;
          unit = entry.constant_term();
          break;
        }
      }
    }
    if (rel_idx < 0) break;

    // e_{comp_idx} = -(1/unit) * (rel - unit*e_{comp_idx}); substitute and drop.
    Vec pivot = rels[rel_idx];
    rels.erase(rels.begin() + rel_idx);
    for (auto& r : rels) {
      MultiPoly f = r[comp_idx].scaled(unit.inverse());
      if (f.is_zero()) continue;
      for (int c = 0; c < F.rank(); ++c) r[c] -= f * pivot[c];
    }
    FreeModule newF{F.ring, {}};
    for (int c = 0; c < F.rank(); ++c)
      if (c != comp_idx) newF.twists.push_back(F.twists[c]);
    for (auto& r : rels) {
      Vec nr;
      for (int c = 0; c < F.rank(); ++c)
        if (c != comp_idx) nr.push_back(r[c]);
      r = std::move(nr);
    }
    F = newF;
    std::erase_if(rels, [](const Vec& v) { return vec_is_zero(v); });
  }
  Presentation out{F, rels};
  out.validate();
  return out;
}

Resolution free_resolution(const Presentation& P, TermOrder ord) {
  Presentation M = minimize_presentation(P, ord);
  Resolution R;
  R.modules.push_back(M.F0);
  std::vector<Vec> cols = minimal_generators(M.F0, M.relations, ord);
  const int max_steps = M.F0.ring->fiber_count() + 1;  // Hilbert syzygy bound
  int step = 0;
  while (!cols.empty()) {
    if (++step > max_steps)
      throw std::logic_error("free_resolution: exceeded the syzygy-theorem length bound");
    R.maps.push_back(cols);
    FreeModule next{M.F0.ring, {}};
    for (const auto& c : cols) next.twists.push_back(-*vec_degree(R.modules.back(), c));
    R.modules.push_back(next);
    SyzygyModule syz = syzygies(R.modules[R.modules.size() - 2], cols, ord);
    cols = minimal_generators(syz.mod, syz.gens, ord);
  }
  return R;
}

BettiTable betti_table(const Resolution& R) {
  BettiTable t;
  for (std::size_t i = 0; i < R.modules.size(); ++i)
    for (int k = 0; k < R.modules[i].rank(); ++k)
      t.beta[{static_cast<int>(i), R.modules[i].gen_degree(k)}]++;
  return t;
}

int BettiTable::max_degree() const {
  int m = 0;
  for (const auto& [ij, b] : beta)
    if (b != 0) m = std::max(m, ij.second);
  return m;
}

int BettiTable::regularity_bound() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [ij, b] : beta)
    if (b != 0) m = std::max(m, ij.second - ij.first);
  return m;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  for (const auto& [ij, b] : beta)
    os << "beta(" << ij.first << "," << ij.second << ")=" << b << " ";
  return os.str();
}

GradedModule::GradedModule(Presentation P, TermOrder ord)
    : pres_(std::move(P)), ord_(ord), gb_(buchberger(pres_.F0, pres_.relations, ord)) {
  pres_.validate();
}

const std::vector<std::pair<int, Expo>>& GradedModule::std_basis(int d) const {
  auto it = basis_cache_.find(d);
  if (it != basis_cache_.end()) return it->second;
  std::vector<std::pair<int, Expo>> basis;
  for (auto& [comp, mono] : pres_.F0.degree_basis(d)) {
    bool reducible = false;
    for (const auto& lt : gb_.leads)
      if (term_divides(lt.comp, lt.mono, comp, mono)) { reducible = true; break; }
    if (!reducible) basis.emplace_back(comp, mono);
  }
  auto& idx = index_cache_[d];
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  return basis_cache_.emplace(d, std::move(basis)).first->second;
}

int GradedModule::hilbert_function(int d) const {
  return static_cast<int>(std_basis(d).size());
}

std::vector<Rational> GradedModule::coords(const Vec& v, int d) const {
  const auto& basis = std_basis(d);
  const auto& idx = index_cache_.at(d);
  Vec nf = normal_form(v, gb_);
  std::vector<Rational> out(basis.size(), Rational(0));
  for (int c = 0; c < pres_.F0.rank(); ++c) {
    for (const auto& [e, coeff] : nf[c].terms()) {
      auto it = idx.find({c, e});
      if (it == idx.end())
        throw std::logic_error("GradedModule::coords: term outside the degree-d basis");
      out[it->second] = coeff;
    }
  }
  return out;
}

const std::vector<std::vector<std::pair<int, Rational>>>& GradedModule::mult_by_monomial(
    const Expo& mu, int d) const {
  auto key = std::make_pair(mu, d);
  auto it = mult_cache_.find(key);
  if (it != mult_cache_.end()) return it->second;

  const auto& src = std_basis(d);
  const int dmu = pres_.F0.ring->fiber_degree(mu);
  const auto& dst = std_basis(d + dmu);
  const auto& dst_idx = index_cache_.at(d + dmu);
  std::vector<std::vector<std::pair<int, Rational>>> cols(src.size());
  const int nv = ring()->size();
  for (std::size_t s = 0; s < src.size(); ++s) {
    Expo prod(nv);
    for (int i = 0; i < nv; ++i) prod[i] = src[s].second[i] + mu[i];
    // Fast path: the product is itself standard.
    auto hit = dst_idx.find({src[s].first, prod});
    if (hit != dst_idx.end()) {
      cols[s].emplace_back(hit->second, Rational(1));
      continue;
    }
    Vec v = zero_vec(pres_.F0);
    v[src[s].first].add_term(prod, Rational(1));
    Vec nf = normal_form(v, gb_);
    for (int c = 0; c < pres_.F0.rank(); ++c)
      for (const auto& [e, coeff] : nf[c].terms()) cols[s].emplace_back(dst_idx.at({c, e}), coeff);
  }
  (void)dst;
  return mult_cache_.emplace(std::move(key), std::move(cols)).first->second;
}

NumericalPolynomial hilbert_polynomial(const Presentation& P, TermOrder ord) {
  Resolution R = free_resolution(P, ord);
  const int n = P.F0.ring->fiber_count() - 1;
  NumericalPolynomial hp;
  for (std::size_t i = 0; i < R.modules.size(); ++i) {
    for (int tw : R.modules[i].twists) {
      NumericalPolynomial term = binomial_shift_poly(n, n + tw);
      hp = (i % 2 == 0) ? hp + term : hp - term;
    }
  }
  // Cross-check against the Hilbert function in n+1 degrees past every twist.
  BettiTable bt = betti_table(R);
  GradedModule M(P, ord);
  int d0 = std::max(bt.max_degree(), 0);
  for (int d = d0; d <= d0 + n; ++d) {
    if (hp.evaluate(d) != M.hilbert_function(d))
      throw std::logic_error("hilbert_polynomial: resolution and Hilbert function disagree");
  }
  return hp;
}

Presentation saturate(const Presentation& P, TermOrder ord) {
  Presentation out{P.F0, saturate_submodule(P.F0, P.relations, ord)};
  return out;
}

Presentation restrict_to_hyperplane(const Presentation& P, const std::vector<Rational>& l_coeffs) {
  const RingPtr& ring = P.F0.ring;
  const int n = ring->fiber_count() - 1;
  if (static_cast<int>(l_coeffs.size()) != n)
    throw std::logic_error("restrict_to_hyperplane: need one coefficient per remaining variable");
  RingPtr target = Ring::fiber(ring->name(0).substr(0, ring->name(0).size() - 1), n);
  // x_n |-> sum l_i x_i, then drop x_n.
  MultiPoly sub(ring);
  for (int i = 0; i < n; ++i)
    sub += MultiPoly::variable(ring, i).scaled(l_coeffs[i]);
  Presentation out;
  out.F0 = FreeModule{target, P.F0.twists};
  for (const auto& rel : P.relations) {
    Vec nr;
    for (const auto& entry : rel)
      nr.push_back(entry.substitute(n, sub).map_to_ring(target));
    if (!vec_is_zero(nr)) out.relations.push_back(std::move(nr));
  }
  out.validate();
  return out;
}

}  // namespace quotkit
