#include "quotkit/quotgrass.hpp"

#include <algorithm>

#include "quotkit/errors.hpp"

namespace quotkit {

namespace {

// Reduced row echelon basis of the span of the given vectors.
std::vector<std::vector<Rational>> rref_basis(const std::vector<std::vector<Rational>>& vecs,
                                              int width) {
  Mat<Rational> m(static_cast<int>(vecs.size()), width);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < width; ++j) m(static_cast<int>(i), j) = vecs[i][j];
  auto pivots = m.rref();
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rational> row(width);
    for (int j = 0; j < width; ++j) row[j] = m(static_cast<int>(i), j);
    out.push_back(std::move(row));
  }
  return out;
}

// Degree-e vectors spanning the strand of a submodule with the given GB,
// in coordinates of F.degree_basis(e).
std::vector<std::vector<Rational>> strand_span(const FreeModule& F, const GroebnerBasis& gb,
                                               int e) {
  auto basis = F.degree_basis(e);
  std::map<std::pair<int, Expo>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  std::vector<std::vector<Rational>> vecs;
  for (const auto& g : gb.elems) {
    auto dg = vec_degree(F, g);
    if (!dg || *dg > e) continue;
    for (const auto& mu : monomials_of_degree(F.ring, e - *dg)) {
      std::vector<Rational> v(basis.size(), Rational(0));
      for (int c = 0; c < F.rank(); ++c)
        for (const auto& [ex, coeff] : g[c].terms()) {
          Expo full(ex.size());
          for (std::size_t i = 0; i < ex.size(); ++i) full[i] = ex[i] + mu[i];
          v[index.at({c, full})] = coeff;
        }
      vecs.push_back(std::move(v));
    }
  }
  return vecs;
}

}  // namespace

QuotientDatum make_quotient(int p, const RingPtr& ring, const std::vector<Vec>& kernel_gens,
                            TermOrder ord) {
  QuotientDatum q;
  q.p = p;
  q.n = ring->fiber_count() - 1;
  q.pres.F0 = FreeModule{ring, std::vector<int>(p, 0)};
  for (const auto& g : kernel_gens)
    if (!vec_is_zero(g)) q.pres.relations.push_back(g);
  q.pres.validate();
  q.kernel_gb = buchberger(q.pres.F0, q.pres.relations, ord);
  q.hp = hilbert_polynomial(q.pres, ord);
  return q;
}

GrassSectionPoint grass_point_of_quotient(const QuotientDatum& q, int r, TermOrder ord) {
  GrassSectionPoint g;
  g.p = q.p;
  g.n = q.n;
  g.r = r;
  g.ambient_dim = q.pres.F0.degree_dim(r);

  GradedModule M(q.pres, ord);
  mpz_class phi_r = q.hp.evaluate(r);
  if (mpz_class(M.hilbert_function(r)) != phi_r)
    throw RegularityTooLowError(
        "grass_point_of_quotient: strand rank " + std::to_string(M.hilbert_function(r)) +
        " differs from Phi(r) = " + phi_r.get_str() + "; raise r");

  auto ambient = q.pres.F0.degree_basis(r);
  g.quotient = Mat<Rational>(M.hilbert_function(r), g.ambient_dim);
  for (std::size_t j = 0; j < ambient.size(); ++j) {
    Vec v = zero_vec(q.pres.F0);
    v[ambient[j].first].add_term(ambient[j].second, Rational(1));
    auto coords = M.coords(v, r);
    for (std::size_t i = 0; i < coords.size(); ++i)
      g.quotient(static_cast<int>(i), static_cast<int>(j)) = coords[i];
  }

  g.kernel_basis = rref_basis(strand_span(q.pres.F0, q.kernel_gb, r), g.ambient_dim);

  // Sanity: kernel and quotient row space are complementary in the ambient.
  Mat<Rational> stacked(static_cast<int>(g.kernel_basis.size()) + g.quotient.rows(),
                        g.ambient_dim);
  int row = 0;
  for (const auto& v : g.kernel_basis) {
    for (int j = 0; j < g.ambient_dim; ++j) stacked(row, j) = v[j];
    ++row;
  }
  for (int i = 0; i < g.quotient.rows(); ++i, ++row)
    for (int j = 0; j < g.ambient_dim; ++j) stacked(row, j) = g.quotient(i, j);
  if (stacked.rank() != g.ambient_dim)
    throw std::logic_error("grass_point_of_quotient: kernel + rows do not span the ambient");
  return g;
}

QuotientDatum quotient_from_grass_point(const GrassSectionPoint& g, const RingPtr& ring,
                                        TermOrder ord) {
  FreeModule F0{ring, std::vector<int>(g.p, 0)};
  auto ambient = F0.degree_basis(g.r);
  if (static_cast<int>(ambient.size()) != g.ambient_dim)
    throw std::logic_error("quotient_from_grass_point: ambient dimension mismatch");
  std::vector<Vec> gens;
  for (const auto& v : g.kernel_basis) {
    Vec rel = zero_vec(F0);
    for (int j = 0; j < g.ambient_dim; ++j)
      if (!v[j].is_zero()) rel[ambient[j].first].add_term(ambient[j].second, v[j]);
    if (!vec_is_zero(rel)) gens.push_back(std::move(rel));
  }
  return make_quotient(g.p, ring, gens, ord);
}

std::vector<std::vector<Rational>> kernel_strand(const QuotientDatum& q, int e) {
  return rref_basis(strand_span(q.pres.F0, q.kernel_gb, e), q.pres.F0.degree_dim(e));
}

bool quotients_agree(const QuotientDatum& a, const QuotientDatum& b, int r, int window,
                     bool saturated) {
  if (a.p != b.p || a.n != b.n) return false;
  for (int e = r; e <= r + window; ++e)
    if (kernel_strand(a, e) != kernel_strand(b, e)) return false;
  if (saturated) {
    std::vector<Vec> sat_a = saturate_submodule(a.pres.F0, a.pres.relations);
    std::vector<Vec> sat_b = saturate_submodule(b.pres.F0, b.pres.relations);
    if (!same_submodule(a.pres.F0, sat_a, sat_b)) return false;
  }
  return true;
}

StratumDescriptor quot_stratum(int p, int n, int r,
                               const std::vector<std::vector<MultiPoly>>& kernel_family,
                               const NumericalPolynomial& phi, int N, int refine_cap,
                               TermOrder ord) {
  if (kernel_family.empty())
    throw PreconditionError("quot_stratum: empty kernel family");
  RingPtr R = kernel_family.front().front().ring();
  if (R->fiber_count() != n + 1)
    throw PreconditionError("quot_stratum: family ring has wrong fiber count");
  if (N < r) throw PreconditionError("quot_stratum: N must be >= r");

  FamilyPresentation F;
  F.F0 = FreeModule{R, std::vector<int>(p, 0)};
  auto ambient = F.F0.degree_basis(r);
  for (const auto& vec : kernel_family) {
    if (vec.size() != ambient.size())
      throw PreconditionError("quot_stratum: kernel vector length mismatch");
    Vec rel = zero_vec(F.F0);
    for (std::size_t j = 0; j < ambient.size(); ++j) {
      if (vec[j].is_zero()) continue;
      rel[ambient[j].first] += vec[j].times_monomial(ambient[j].second, Rational(1));
    }
    if (!vec_is_zero(rel)) F.relations.push_back(std::move(rel));
  }
  F.validate();

  StratificationResult res = hilbert_stratification(F, N, refine_cap, ord);
  for (auto& s : res.strata)
    if (s.hp_label && *s.hp_label == phi) return s;

  StratumDescriptor empty;
  empty.hp_label = phi;
  empty.closed = Ideal::unit(R->base_subring());
  return empty;
}

}  // namespace quotkit
