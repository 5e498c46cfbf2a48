#include "quotkit/regularity.hpp"

#include <algorithm>
#include <numeric>

namespace quotkit {

namespace {

// Subsets of {0..n} of size p+1, lexicographic.
std::vector<std::vector<int>> index_subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  if (size <= 0 || size > n + 1) return out;
  std::vector<int> cur(size);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == n - (size - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

int sparse_rank(std::vector<std::map<int, Rational>> rows) {
  int rank = 0;
  std::vector<bool> done(rows.size(), false);
  // Column population counts guide pivot choice (Markowitz-style heuristic).
  std::map<int, int> col_pop;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) col_pop[c]++;

  while (true) {
    int best_row = -1;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      if (best_row < 0 || rows[i].size() < best_size) {
        best_row = static_cast<int>(i);
        best_size = rows[i].size();
      }
    }
    if (best_row < 0) break;
    // Choose the sparsest column within the chosen row.
    int pivot_col = -1;
    int pop = 0;
    for (const auto& [c, v] : rows[best_row]) {
      int cp = col_pop[c];
      if (pivot_col < 0 || cp < pop) { pivot_col = c; pop = cp; }
    }
    const Rational pivot_val = rows[best_row][pivot_col];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == best_row || done[i]) continue;
      auto hit = rows[i].find(pivot_col);
      if (hit == rows[i].end()) continue;
      Rational f = hit->second / pivot_val;
      for (const auto& [c, v] : rows[best_row]) {
        auto [it, fresh] = rows[i].try_emplace(c, Rational(0));
        it->second -= f * v;
        if (it->second.is_zero()) {
          rows[i].erase(it);
          if (!fresh) col_pop[c]--;
        } else if (fresh) {
          col_pop[c]++;
        }
      }
    }
    for (const auto& [c, v] : rows[best_row]) col_pop[c]--;
    done[best_row] = true;
    rows[best_row].clear();
    ++rank;
  }
  return rank;
}

CohomologyEngine::CohomologyEngine(GradedModulePtr M, int cech_cap)
    : M_(std::move(M)), n_(M_->ring()->fiber_count() - 1), cap_(cech_cap) {}

// Rank of the Cech differential C^p -> C^{p+1} at truncation k, twist d.
// Sign of the (J, J u {j}) block is (-1)^{position of j in J u {j}}.
namespace {

struct CechLevel {
  std::vector<std::vector<int>> subsets;
  std::vector<int> offsets;
  int dim = 0;
};

CechLevel cech_level(const GradedModule& M, int n, int p, int d, int k) {
  CechLevel L;
  L.subsets = index_subsets(n, p + 1);
  const int summand_dim = M.hilbert_function(d + k * (p + 1));
  for (std::size_t s = 0; s < L.subsets.size(); ++s) {
    L.offsets.push_back(L.dim);
    L.dim += summand_dim;
  }
  return L;
}

std::vector<std::map<int, Rational>> cech_differential(const GradedModule& M, int n, int p, int d,
                                                       int k) {
  // Rows indexed by C^{p+1} basis, columns by C^p basis.
  CechLevel src = cech_level(M, n, p, d, k);
  CechLevel dst = cech_level(M, n, p + 1, d, k);
  std::map<std::vector<int>, int> dst_pos;
  for (std::size_t t = 0; t < dst.subsets.size(); ++t) dst_pos[dst.subsets[t]] = static_cast<int>(t);

  std::vector<std::map<int, Rational>> rows(dst.dim);
  const int src_deg = d + k * (p + 1);
  const int nv = M.ring()->size();
  for (std::size_t s = 0; s < src.subsets.size(); ++s) {
    const auto& J = src.subsets[s];
    for (int j = 0; j <= n; ++j) {
      if (std::find(J.begin(), J.end(), j) != J.end()) continue;
      std::vector<int> J2 = J;
      J2.insert(std::upper_bound(J2.begin(), J2.end(), j), j);
      int pos = static_cast<int>(std::lower_bound(J2.begin(), J2.end(), j) - J2.begin());
      int sign = (pos % 2 == 0) ? 1 : -1;
      auto it = dst_pos.find(J2);
      if (it == dst_pos.end()) continue;
      int dst_off = dst.offsets[it->second];
      Expo mu(nv, 0);
      mu[j] = k;
      const auto& cols = M.mult_by_monomial(mu, src_deg);
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [target, val] : cols[c])
          rows[dst_off + target][src.offsets[s] + static_cast<int>(c)] +=
              (sign > 0 ? val : -val);
    }
  }
  // Drop explicit zeros introduced by cancelling contributions.
  for (auto& r : rows)
    for (auto it = r.begin(); it != r.end();)
      it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return rows;
}

}  // namespace

const NumericalPolynomial& CohomologyEngine::hp() {
  if (!hp_) hp_ = hilbert_polynomial(M_->pres(), M_->order());
  return *hp_;
}

std::vector<int> CohomologyEngine::column_at_level(int d, int k) const {
  std::vector<int> dims(n_ + 1), rank(n_ + 1, 0);
  for (int p = 0; p <= n_; ++p) dims[p] = cech_level(*M_, n_, p, d, k).dim;
  for (int p = 0; p + 1 <= n_; ++p) rank[p] = sparse_rank(cech_differential(*M_, n_, p, d, k));
  std::vector<int> h(n_ + 1);
  for (int i = 0; i <= n_; ++i) h[i] = dims[i] - rank[i] - (i > 0 ? rank[i - 1] : 0);
  return h;
}

void CohomologyEngine::stabilize_column(int d) {
  mpz_class chi_true = hp().evaluate(d);
  std::vector<int> prev = column_at_level(d, 1);
  int agreements = 0;
  for (int k = 2; k <= cap_; ++k) {
    std::vector<int> cur = column_at_level(d, k);
    agreements = (cur == prev) ? agreements + 1 : 0;
    if (agreements >= 2) {
      mpz_class chi = 0;
      for (int i = 0; i <= n_; ++i) chi += (i % 2 == 0) ? cur[i] : -cur[i];
      if (chi == chi_true) {
        for (int i = 0; i <= n_; ++i) cache_[{i, d}] = {cur[i], k};
        return;
      }
      agreements = 0;  // plateau with the wrong Euler characteristic: keep going
    }
    prev = std::move(cur);
  }
  throw StabilizationFailureError("sheaf_cohomology: truncation cap " + std::to_string(cap_) +
                                  " hit before stabilization (d=" + std::to_string(d) + ")");
}

int CohomologyEngine::h(int i, int d) {
  if (i < 0 || i > n_) return 0;
  auto it = cache_.find({i, d});
  if (it != cache_.end()) return it->second.first;
  stabilize_column(d);
  return cache_.at({i, d}).first;
}

CohomologyTable CohomologyEngine::table(int d_lo, int d_hi) {
  CohomologyTable t;
  t.n = n_;
  for (int d = d_lo; d <= d_hi; ++d)
    for (int i = 0; i <= n_; ++i) t.h[{i, d}] = h(i, d);
  return t;
}

bool CohomologyEngine::is_m_regular(int m) {
  for (int i = 1; i <= n_; ++i)
    if (h(i, m - i) != 0) return false;
  return true;
}

int CohomologyEngine::betti_start() {
  if (!betti_start_) {
    Resolution R = free_resolution(M_->pres(), M_->order());
    betti_start_ = betti_table(R).regularity_bound();
  }
  return *betti_start_;
}

int CohomologyEngine::regularity() {
  if (hp().is_zero()) throw PreconditionError("regularity: the associated sheaf is zero");
  int m = betti_start();
  int guard = 0;
  while (!is_m_regular(m)) {
    ++m;
    if (++guard > 64) throw std::logic_error("regularity: Betti start bound failed");
  }
  const int floor = m - 200;
  while (m - 1 >= floor && is_m_regular(m - 1)) --m;
  if (m - 1 < floor)
    throw PreconditionError("regularity: m-regular for every tested m (finite support?)");
  return m;
}

std::vector<std::vector<Rational>> CohomologyEngine::h0_kernel(int d, int k) const {
  CechLevel c0 = cech_level(*M_, n_, 0, d, k);
  auto rows = cech_differential(*M_, n_, 0, d, k);
  CechLevel c1 = cech_level(*M_, n_, 1, d, k);
  Mat<Rational> D(c1.dim, c0.dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) D(static_cast<int>(r), c) = v;
  return D.kernel_basis();
}

CastelnuovoResult CohomologyEngine::castelnuovo_checks(int r) {
  CastelnuovoResult res;

  res.higher_vanishing = true;
  for (int i = 1; i <= n_; ++i)
    if (h(i, r) != 0) res.higher_vanishing = false;

  // Multiplication H^0(O(1)) (x) H^0(F(r)) -> H^0(F(r+1)): realize both H^0
  // spaces as Cech kernels at one shared truncation level and compare the
  // rank of the multiplied vectors with h^0(r+1).
  int h0r = h(0, r);
  int h0r1 = h(0, r + 1);
  int k = std::max(cache_.at({0, r}).second, cache_.at({0, r + 1}).second);
  auto ker_r = h0_kernel(r, k);
  auto ker_r1 = h0_kernel(r + 1, k);
  if (static_cast<int>(ker_r.size()) != h0r || static_cast<int>(ker_r1.size()) != h0r1)
    throw StabilizationFailureError("castelnuovo_checks: kernel level disagreement");
  if (h0r1 == 0) {
    res.mult_surjective = true;
  } else {
    // Coordinates of x_l * v for every kernel vector v and variable x_l.
    const int per_summand_src = M_->hilbert_function(r + k);
    std::vector<std::map<int, Rational>> rows;  // transposed: rows = products
    const int nv = M_->ring()->size();
    for (const auto& v : ker_r) {
      for (int l = 0; l <= n_; ++l) {
        Expo mu(nv, 0);
        mu[l] = 1;
        const auto& cols = M_->mult_by_monomial(mu, r + k);
        const int per_summand_dst = M_->hilbert_function(r + 1 + k);
        std::map<int, Rational> prod;
        for (int summand = 0; summand <= n_; ++summand) {
          for (int c = 0; c < per_summand_src; ++c) {
            const Rational& coeff = v[summand * per_summand_src + c];
            if (coeff.is_zero()) continue;
            for (const auto& [t, val] : cols[c]) {
              Rational& slot = prod[summand * per_summand_dst + t];
              slot += coeff * val;
            }
          }
        }
        for (auto it = prod.begin(); it != prod.end();)
          it = it->second.is_zero() ? prod.erase(it) : std::next(it);
        rows.push_back(std::move(prod));
      }
    }
    res.mult_surjective = sparse_rank(std::move(rows)) == h0r1;
  }

  // Global generation: degree-r elements of the saturation generate every
  // degree up to the saturated module's Betti bound.
  if (!saturated_) {
    saturated_ = std::make_shared<GradedModule>(saturate(M_->pres(), M_->order()), M_->order());
    sat_betti_ = betti_table(free_resolution(saturated_->pres(), M_->order()));
  }
  const GradedModule& S = *saturated_;
  res.globally_generated = true;
  int top = std::max(sat_betti_->max_degree() + 1, r + 1);
  for (int e = r + 1; e <= top && res.globally_generated; ++e) {
    int target_dim = S.hilbert_function(e);
    if (target_dim == 0) continue;
    if (S.hilbert_function(r) == 0) { res.globally_generated = false; break; }
    std::vector<std::map<int, Rational>> rows;  // one row per (monomial, basis elem)
    for (const auto& mu : monomials_of_degree(S.ring(), e - r)) {
      const auto& cols = S.mult_by_monomial(mu, r);
      for (const auto& col : cols) {
        std::map<int, Rational> row;
        for (const auto& [t, val] : col) row[t] = val;
        rows.push_back(std::move(row));
      }
    }
    res.globally_generated = sparse_rank(std::move(rows)) == target_dim;
  }
  return res;
}

long mumford_bound(int p, int n, const NumericalPolynomial& a) {
  if (a.degree() > n)
    throw DegreeTooHighError("mumford_bound: polynomial degree exceeds the ambient dimension");
  if (n == 0) return 0;
  NumericalPolynomial b = hyperplane_restriction(a);
  long m0 = mumford_bound(p, n - 1, b);
  mpz_class P = mpz_class(p) * binomial(mpz_class(n) + m0, n) - a.evaluate(m0);
  if (P < 0) P = 0;
  mpz_class m = P + m0;
  if (!m.fits_slong_p()) throw std::overflow_error("mumford_bound: bound out of range");
  return m.get_si();
}

}  // namespace quotkit
