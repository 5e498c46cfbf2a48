#include "quotkit/flattening.hpp"

#include <algorithm>

#include "quotkit/errors.hpp"
#include "quotkit/groebner.hpp"

namespace quotkit {

Ideal Ideal::unit(RingPtr r) {
  Ideal I{r, {}};
  I.gens.push_back(MultiPoly::constant(r, Rational(1)));
  return I;
}

namespace {

FreeModule rank_one(const RingPtr& ring) { return FreeModule{ring, {0}}; }

std::vector<Vec> as_vecs(const std::vector<MultiPoly>& polys) {
  std::vector<Vec> out;
  for (const auto& f : polys)
    if (!f.is_zero()) out.push_back(Vec{f});
  return out;
}

}  // namespace

std::vector<MultiPoly> ideal_gb(const Ideal& I, TermOrder ord) {
  GroebnerBasis gb = buchberger(rank_one(I.ring), as_vecs(I.gens), ord);
  std::vector<MultiPoly> out;
  for (const auto& v : gb.elems) out.push_back(v[0]);
  return out;
}

bool ideal_is_unit(const Ideal& I, TermOrder ord) {
  for (const auto& g : ideal_gb(I, ord))
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

bool ideal_equal(const Ideal& a, const Ideal& b, TermOrder ord) {
  return ideal_gb(a, ord) == ideal_gb(b, ord);
}

bool in_radical(const MultiPoly& f, const Ideal& I, TermOrder ord) {
  if (f.is_zero()) return true;
  RingPtr ext = I.ring->extended({"_z"});
  const int z = ext->index_of("_z");
  Ideal J{ext, {}};
  for (const auto& g : I.gens) J.gens.push_back(g.map_to_ring(ext));
  // 1 - z*f
  MultiPoly one = MultiPoly::constant(ext, Rational(1));
  J.gens.push_back(one - MultiPoly::variable(ext, z) * f.map_to_ring(ext));
  return ideal_is_unit(J, ord);
}

bool vanishes_at(const Ideal& I, const std::vector<Rational>& point) {
  for (const auto& g : I.gens)
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

bool StratumDescriptor::contains_point(const std::vector<Rational>& y) const {
  if (!vanishes_at(closed, y)) return false;
  for (const auto& E : excluded)
    if (vanishes_at(E, y)) return false;
  return true;
}

Ideal fitting_ideal(const PolyMatrix& psi, int k) {
  const int e = psi.rows(), m = psi.cols();
  if (k < 0 || k > e) throw std::invalid_argument("fitting_ideal: k out of range 0..e");
  const int s = e - k;
  if (s == 0) return Ideal::unit(psi.ring());
  if (s > std::min(e, m)) return Ideal::zero(psi.ring());
  Ideal I{psi.ring(), {}};
  // All s x s minors.
  std::vector<int> rs(s), cs(s);
  std::vector<std::vector<int>> row_sets, col_sets;
  auto subsets = [](int total, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size);
    for (int i = 0; i < size; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == total - (size - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };
  for (const auto& R : subsets(e, s))
    for (const auto& C : subsets(m, s)) {
      MultiPoly d = psi.minor(R, C);
      if (!d.is_zero()) I.gens.push_back(std::move(d));
    }
  return I;
}

namespace {

// Non-unit and not provably empty: a stratum V(closed) \ union V(E) is
// certified empty when 1 in closed, or when some excluded ideal vanishes on
// all of V(closed) (every generator in the radical).
bool stratum_certified_empty(const Ideal& closed, const std::vector<Ideal>& excluded,
                             TermOrder ord) {
  if (ideal_is_unit(closed, ord)) return true;
  for (const auto& E : excluded) {
    bool covers = true;
    for (const auto& g : E.gens)
      if (!in_radical(g, closed, ord)) { covers = false; break; }
    if (covers) return true;
  }
  return false;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  Ideal out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

}  // namespace

std::vector<StratumDescriptor> rank_strata(const PolyMatrix& psi, TermOrder ord) {
  const int e = psi.rows();
  std::vector<StratumDescriptor> out;
  for (int k = 0; k <= e; ++k) {
    StratumDescriptor s;
    s.rank_label = k;
    s.closed = (k == 0) ? Ideal::zero(psi.ring()) : fitting_ideal(psi, k - 1);
    s.excluded.push_back(fitting_ideal(psi, k));
    if (stratum_certified_empty(s.closed, s.excluded, ord)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

GenericFreeLocus generic_free_locus(const PolyMatrix& psi) {
  const int e = psi.rows(), m = psi.cols();
  auto subsets = [](int total, int size) {
    std::vector<std::vector<int>> out;
    if (size > total) return out;
    std::vector<int> cur(size);
    for (int i = 0; i < size; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == total - (size - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };
  for (int s = std::min(e, m); s >= 1; --s) {
    for (const auto& R : subsets(e, s))
      for (const auto& C : subsets(m, s)) {
        MultiPoly d = psi.minor(R, C);
        if (!d.is_zero()) return {std::move(d), e - s};
      }
  }
  return {MultiPoly::constant(psi.ring(), Rational(1)), e};
}

void FamilyPresentation::validate() const {
  for (const auto& rel : relations) {
    if (static_cast<int>(rel.size()) != F0.rank())
      throw std::logic_error("FamilyPresentation: relation rank mismatch");
    std::optional<int> deg;
    for (int c = 0; c < F0.rank(); ++c) {
      for (const auto& [ex, coeff] : rel[c].terms()) {
        int d = F0.ring->fiber_degree(ex) - F0.twists[c];
        if (!deg) deg = d;
        if (d != *deg)
          throw std::logic_error("FamilyPresentation: relation not x-homogeneous");
      }
    }
  }
}

Presentation FamilyPresentation::specialize(const std::vector<Rational>& y) const {
  const RingPtr& R = F0.ring;
  RingPtr fiber = R->fiber_subring();
  Presentation P;
  P.F0 = FreeModule{fiber, F0.twists};
  for (const auto& rel : relations) {
    Vec nr;
    for (const auto& entry : rel) nr.push_back(entry.specialize_base(y, fiber));
    if (!vec_is_zero(nr)) P.relations.push_back(std::move(nr));
  }
  P.validate();
  return P;
}

StrandPresentation strand_presentation(const FamilyPresentation& F, int d) {
  const RingPtr& R = F.F0.ring;
  RingPtr base = R->base_subring();
  StrandPresentation out;
  out.row_basis = F.F0.degree_basis(d);
  std::map<std::pair<int, Expo>, int> row_of;
  for (std::size_t i = 0; i < out.row_basis.size(); ++i)
    row_of[out.row_basis[i]] = static_cast<int>(i);

  // Columns: x-monomial multiples of each relation landing in x-degree d.
  struct Column {
    std::vector<std::pair<int, MultiPoly>> entries;  // (row, base coefficient)
  };
  std::vector<Column> cols;
  const int nv = R->size();
  for (const auto& rel : F.relations) {
    // x-degree of the relation as an element of F0.
    std::optional<int> rd;
    for (int c = 0; c < F.F0.rank(); ++c)
      for (const auto& [ex, coeff] : rel[c].terms()) {
        rd = R->fiber_degree(ex) - F.F0.twists[c];
        break;
      }
    if (!rd) continue;
    for (const auto& mu : monomials_of_degree(R, d - *rd)) {
      Column col;
      for (int c = 0; c < F.F0.rank(); ++c) {
        // Group (mu * rel[c]) by fiber monomial.
        MultiPoly shifted = rel[c].times_monomial(mu, Rational(1));
        for (auto& [fiber_expo, base_poly] : shifted.collect_by_fiber_monomial(base)) {
          Expo full(nv, 0);
          for (int i = 0; i < R->fiber_count(); ++i) full[i] = fiber_expo[i];
          auto it = row_of.find({c, full});
          if (it == row_of.end())
            throw std::logic_error("strand_presentation: monomial outside the strand basis");
          col.entries.emplace_back(it->second, std::move(base_poly));
        }
      }
      cols.push_back(std::move(col));
    }
  }

  // Deduplicate scalar-proportional columns; they generate the same minors.
  std::vector<int> keep;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].entries.empty()) continue;
    keep.push_back(static_cast<int>(j));
  }

  out.psi = PolyMatrix(base, static_cast<int>(out.row_basis.size()),
                       static_cast<int>(keep.size()));
  for (std::size_t jj = 0; jj < keep.size(); ++jj)
    for (auto& [row, poly] : cols[keep[jj]].entries) out.psi(row, static_cast<int>(jj)) = poly;
  return out;
}

bool validate_stratification(const FamilyPresentation& F, const StratificationResult& res,
                             const std::vector<std::vector<Rational>>& sample_points,
                             TermOrder ord) {
  for (const auto& pt : sample_points) {
    const StratumDescriptor* home = nullptr;
    for (const auto& s : res.strata) {
      if (!s.contains_point(pt)) continue;
      if (home) return false;  // strata overlap
      home = &s;
    }
    if (!home || !home->hp_label) return false;
    if (hilbert_polynomial(F.specialize(pt), ord) != *home->hp_label) return false;
  }
  return true;
}

StratificationResult hilbert_stratification(const FamilyPresentation& F, int N, int refine_cap,
                                            TermOrder ord) {
  const int n = F.F0.ring->fiber_count() - 1;
  RingPtr base = F.F0.ring->base_subring();

  std::vector<StrandPresentation> strands;
  for (int i = 0; i <= n; ++i) strands.push_back(strand_presentation(F, N + i));

  struct Partial {
    Ideal closed;
    std::vector<Ideal> excluded;
    std::vector<mpz_class> ranks;
  };
  std::vector<Partial> level{{Ideal::zero(base), {}, {}}};
  for (int i = 0; i <= n; ++i) {
    std::vector<Partial> next;
    const int e = strands[i].psi.rows();
    for (const auto& part : level) {
      for (int k = 0; k <= e; ++k) {
        Partial child = part;
        if (k > 0) child.closed = ideal_sum(child.closed, fitting_ideal(strands[i].psi, k - 1));
        child.excluded.push_back(ideal_sum(part.closed, fitting_ideal(strands[i].psi, k)));
        child.ranks.push_back(k);
        if (stratum_certified_empty(child.closed, child.excluded, ord)) continue;
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }

  StratificationResult res;
  res.last_strand = N + n;
  for (auto& part : level) {
    StratumDescriptor s;
    s.hp_label = interpolate(part.ranks, N);
    s.closed = part.closed;
    s.excluded = part.excluded;

    // Thicken the closed ideal with fitting ideals of higher strands until
    // the Groebner basis is unchanged twice in a row.
    std::vector<MultiPoly> gb = ideal_gb(s.closed, ord);
    int stable = 0;
    int d = N + n;
    while (stable < 2) {
      if (d - (N + n) >= refine_cap) {
        s.refine_capped = true;
        res.refine_capped = true;
        break;
      }
      ++d;
      StrandPresentation str = strand_presentation(F, d);
      res.last_strand = std::max(res.last_strand, d);
      mpz_class want = s.hp_label->evaluate(d);
      if (want < 0 || want > str.psi.rows())
        throw PreconditionError(
            "hilbert_stratification: stratum label leaves 0..dim at strand " +
            std::to_string(d) + "; N is below some fiber's regularity");
      long k = want.get_si();
      if (k > 0) s.closed = ideal_sum(s.closed, fitting_ideal(str.psi, static_cast<int>(k) - 1));
      std::vector<MultiPoly> gb2 = ideal_gb(s.closed, ord);
      stable = (gb2 == gb) ? stable + 1 : 0;
      gb = std::move(gb2);
    }
    s.closed.gens = gb;  // canonical generators

    // Re-anchor excluded ideals so each contains the final closed ideal.
    for (auto& E : s.excluded) E = ideal_sum(E, s.closed);
    res.strata.push_back(std::move(s));
  }
  return res;
}

}  // namespace quotkit
