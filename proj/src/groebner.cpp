#include "quotkit/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quotkit {

namespace {

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Expo expo_div(const Expo& a, const Expo& b) {
  Expo m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

struct WorkElem {
  Vec v;
  ModTerm lead;
  std::vector<MultiPoly> track;
};

// Full division of v by the working set, with tracking update.
// track has one polynomial per original input generator.
Vec reduce_tracked(const FreeModule& F, TermOrder ord, Vec v, std::vector<MultiPoly>& track,
                   const std::vector<WorkElem>& G) {
  Vec rem = zero_vec(F);
  while (!vec_is_zero(v)) {
    ModTerm t = leading_term(F.ring, ord, v);
    bool reduced = false;
    for (const auto& g : G) {
      if (!term_divides(g.lead.comp, g.lead.mono, t.comp, t.mono)) continue;
      Expo q = expo_div(t.mono, g.lead.mono);
      Rational c = t.coeff / g.lead.coeff;
      for (int i = 0; i < F.rank(); ++i) v[i] -= g.v[i].times_monomial(q, c);
      for (std::size_t l = 0; l < track.size(); ++l) track[l] -= g.track[l].times_monomial(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[t.comp].add_term(t.mono, t.coeff);
      v[t.comp].add_term(t.mono, -t.coeff);
    }
  }
  return rem;
}

}  // namespace

GroebnerBasis buchberger(const FreeModule& F, const std::vector<Vec>& gens, TermOrder ord) {
  const std::size_t n_in = gens.size();
  std::vector<WorkElem> G;

  auto add_elem = [&](Vec v, std::vector<MultiPoly> track) -> bool {
    if (vec_is_zero(v)) return false;
    WorkElem w;
    w.lead = leading_term(F.ring, ord, v);
    w.v = std::move(v);
    w.track = std::move(track);
    G.push_back(std::move(w));
    return true;
  };

  // Seed with the input generators, reducing each against what is already in.
  for (std::size_t l = 0; l < n_in; ++l) {
    std::vector<MultiPoly> track(n_in, MultiPoly(F.ring));
    track[l] = MultiPoly::constant(F.ring, Rational(1));
    Vec v = gens[l];
    Vec rem = reduce_tracked(F, ord, std::move(v), track, G);
    // rem = gens[l] - (reductions); tracking already reflects rem.
    add_elem(std::move(rem), std::move(track));
  }

  // Pair queue under the normal strategy: smallest lcm degree first.
  struct Pair {
    int deg;
    int i, j;
    bool operator<(const Pair& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<Pair> pairs;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (G[i].lead.comp != G[j].lead.comp) continue;
      Expo m = expo_lcm(G[i].lead.mono, G[j].lead.mono);
      pairs.insert({F.ring->total_degree(m), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const WorkElem& a = G[p.i];
    const WorkElem& b = G[p.j];
    Expo m = expo_lcm(a.lead.mono, b.lead.mono);
    Expo qa = expo_div(m, a.lead.mono);
    Expo qb = expo_div(m, b.lead.mono);
    Vec s = zero_vec(F);
    std::vector<MultiPoly> track(n_in, MultiPoly(F.ring));
    Rational ca = a.lead.coeff.inverse();
    Rational cb = b.lead.coeff.inverse();
    for (int i = 0; i < F.rank(); ++i)
      s[i] = a.v[i].times_monomial(qa, ca) - b.v[i].times_monomial(qb, cb);
    for (std::size_t l = 0; l < n_in; ++l)
      track[l] = a.track[l].times_monomial(qa, ca) - b.track[l].times_monomial(qb, cb);
    Vec rem = reduce_tracked(F, ord, std::move(s), track, G);
    if (add_elem(std::move(rem), std::move(track))) {
      push_pairs_for(static_cast<int>(G.size()) - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by a kept lead.
  std::vector<int> idx(G.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    int c = term_cmp(F.ring, ord, G[x].lead.comp, G[x].lead.mono, G[y].lead.comp, G[y].lead.mono);
    if (c != 0) return c < 0;
    return x < y;
  });
  std::vector<WorkElem> kept;
  for (int i : idx) {
    bool redundant = false;
    for (const auto& k : kept)
      if (term_divides(k.lead.comp, k.lead.mono, G[i].lead.comp, G[i].lead.mono)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(G[i]));
  }

  // Tail-reduce each element against the others and normalize to monic.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<WorkElem> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    Vec red = reduce_tracked(F, ord, kept[i].v, kept[i].track, others);
    kept[i].v = std::move(red);
    kept[i].lead = leading_term(F.ring, ord, kept[i].v);
    Rational inv = kept[i].lead.coeff.inverse();
    for (auto& poly : kept[i].v) poly = poly.scaled(inv);
    for (auto& poly : kept[i].track) poly = poly.scaled(inv);
    kept[i].lead.coeff = Rational(1);
  }

  GroebnerBasis gb;
  gb.mod = F;
  gb.order = ord;
  gb.input_count = static_cast<int>(n_in);
  for (auto& w : kept) {
    gb.elems.push_back(std::move(w.v));
    gb.leads.push_back(std::move(w.lead));
    gb.tracking.push_back(std::move(w.track));
  }
  return gb;
}

Vec normal_form(const Vec& v, const GroebnerBasis& gb, std::vector<MultiPoly>* quotients) {
  const FreeModule& F = gb.mod;
  if (quotients) quotients->assign(gb.elems.size(), MultiPoly(F.ring));
  Vec cur = v;
  Vec rem = zero_vec(F);
  while (!vec_is_zero(cur)) {
    ModTerm t = leading_term(F.ring, gb.order, cur);
    bool reduced = false;
    for (std::size_t k = 0; k < gb.elems.size(); ++k) {
      if (!term_divides(gb.leads[k].comp, gb.leads[k].mono, t.comp, t.mono)) continue;
      Expo q = expo_div(t.mono, gb.leads[k].mono);
      Rational c = t.coeff / gb.leads[k].coeff;
      for (int i = 0; i < F.rank(); ++i) cur[i] -= gb.elems[k][i].times_monomial(q, c);
      if (quotients) (*quotients)[k].add_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[t.comp].add_term(t.mono, t.coeff);
      cur[t.comp].add_term(t.mono, -t.coeff);
    }
  }
  return rem;
}

SyzygyModule schreyer_syzygies(const GroebnerBasis& gb) {
  const FreeModule& F = gb.mod;
  SyzygyModule out;
  out.mod.ring = F.ring;
  bool graded = true;
  std::vector<int> degs(gb.elems.size(), 0);
  for (std::size_t k = 0; k < gb.elems.size(); ++k) {
    if (!vec_is_homogeneous(F, gb.elems[k])) graded = false;
    auto d = vec_degree(F, gb.elems[k]);
    degs[k] = d ? *d : 0;
  }
  for (std::size_t k = 0; k < gb.elems.size(); ++k)
    out.mod.twists.push_back(graded ? -degs[k] : 0);

  for (std::size_t i = 0; i < gb.elems.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
      if (gb.leads[i].comp != gb.leads[j].comp) continue;
      Expo m = expo_lcm(gb.leads[i].mono, gb.leads[j].mono);
      Expo qi = expo_div(m, gb.leads[i].mono);
      Expo qj = expo_div(m, gb.leads[j].mono);
      Rational ci = gb.leads[i].coeff.inverse();
      Rational cj = gb.leads[j].coeff.inverse();
      Vec s = zero_vec(F);
      for (int c = 0; c < F.rank(); ++c)
        s[c] = gb.elems[i][c].times_monomial(qi, ci) - gb.elems[j][c].times_monomial(qj, cj);
      std::vector<MultiPoly> q;
      Vec rem = normal_form(s, gb, &q);
      if (!vec_is_zero(rem))
        throw std::logic_error("schreyer_syzygies: S-vector did not reduce to zero");
      Vec syz(gb.elems.size(), MultiPoly(F.ring));
      syz[i].add_term(qi, ci);
      syz[j].add_term(qj, -cj);
      for (std::size_t k = 0; k < gb.elems.size(); ++k) syz[k] -= q[k];
      if (!vec_is_zero(syz)) out.gens.push_back(std::move(syz));
    }
  }
  return out;
}

SyzygyModule syzygies(const FreeModule& F, const std::vector<Vec>& gens, TermOrder ord) {
  SyzygyModule out;
  out.mod.ring = F.ring;
  bool graded = true;
  for (const auto& g : gens)
    if (!vec_is_homogeneous(F, g)) graded = false;
  for (const auto& g : gens) {
    auto d = vec_degree(F, g);
    out.mod.twists.push_back(graded && d ? -*d : 0);
  }
  if (gens.empty()) return out;

  GroebnerBasis gb = buchberger(F, gens, ord);

  // N: expression of each input in the basis.
  std::vector<std::vector<MultiPoly>> N;
  for (const auto& g : gens) {
    std::vector<MultiPoly> q;
    Vec rem = normal_form(g, gb, &q);
    if (!vec_is_zero(rem)) throw std::logic_error("syzygies: generator not in its own module");
    N.push_back(std::move(q));
  }

  auto add_if_nonzero = [&](Vec v) {
    if (!vec_is_zero(v)) out.gens.push_back(std::move(v));
  };

  // Translate the Schreyer generators through the tracking matrix.
  SyzygyModule sch = schreyer_syzygies(gb);
  for (const auto& sigma : sch.gens) {
    Vec v(gens.size(), MultiPoly(F.ring));
    for (std::size_t l = 0; l < gens.size(); ++l)
      for (std::size_t k = 0; k < gb.elems.size(); ++k) v[l] += gb.tracking[k][l] * sigma[k];
    add_if_nonzero(std::move(v));
  }

  // Columns of I - M*N.
  for (std::size_t l = 0; l < gens.size(); ++l) {
    Vec v(gens.size(), MultiPoly(F.ring));
    v[l] = MultiPoly::constant(F.ring, Rational(1));
    for (std::size_t lp = 0; lp < gens.size(); ++lp)
      for (std::size_t k = 0; k < gb.elems.size(); ++k) v[lp] -= gb.tracking[k][lp] * N[l][k];
    add_if_nonzero(std::move(v));
  }
  return out;
}

std::vector<Vec> intersect_modules(const FreeModule& F, const std::vector<Vec>& a,
                                   const std::vector<Vec>& b, TermOrder ord) {
  std::vector<Vec> combined = a;
  combined.insert(combined.end(), b.begin(), b.end());
  SyzygyModule syz = syzygies(F, combined, ord);
  std::vector<Vec> out;
  for (const auto& s : syz.gens) {
    Vec v = zero_vec(F);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int c = 0; c < F.rank(); ++c) v[c] += s[i] * a[i][c];
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> colon_by_poly(const FreeModule& F, const std::vector<Vec>& u,
                               const MultiPoly& f, TermOrder ord) {
  std::vector<Vec> combined;
  for (int i = 0; i < F.rank(); ++i) {
    Vec v = zero_vec(F);
    v[i] = f;
    combined.push_back(std::move(v));
  }
  combined.insert(combined.end(), u.begin(), u.end());
  SyzygyModule syz = syzygies(F, combined, ord);
  std::vector<Vec> out;
  for (const auto& s : syz.gens) {
    Vec v(s.begin(), s.begin() + F.rank());
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

bool same_submodule(const FreeModule& F, const std::vector<Vec>& a, const std::vector<Vec>& b,
                    TermOrder ord) {
  GroebnerBasis ga = buchberger(F, a, ord);
  GroebnerBasis gc = buchberger(F, b, ord);
  return ga.elems == gc.elems;
}

std::vector<Vec> saturate_submodule(const FreeModule& F, const std::vector<Vec>& u,
                                    TermOrder ord) {
  std::vector<Vec> cur = buchberger(F, u, ord).elems;
  while (true) {
    // (cur : m) = intersection of (cur : x_j) over the fiber variables.
    std::vector<Vec> next;
    for (int j = 0; j < F.ring->fiber_count(); ++j) {
      std::vector<Vec> cj = colon_by_poly(F, cur, MultiPoly::variable(F.ring, j), ord);
      next = (j == 0) ? cj : intersect_modules(F, next, cj, ord);
    }
    std::vector<Vec> next_gb = buchberger(F, next, ord).elems;
    if (next_gb == cur) return cur;
    cur = std::move(next_gb);
  }
}

std::vector<Vec> minimal_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                    TermOrder ord) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!vec_is_zero(gens[i])) idx.push_back(static_cast<int>(i));
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    auto dx = vec_degree(F, gens[x]);
    auto dy = vec_degree(F, gens[y]);
    return *dx < *dy;
  });
  std::vector<Vec> chosen;
  GroebnerBasis gb;
  for (int i : idx) {
    if (!chosen.empty() && vec_is_zero(normal_form(gens[i], gb))) continue;
    chosen.push_back(gens[i]);
    gb = buchberger(F, chosen, ord);
  }
  return chosen;
}

}  // namespace quotkit
