#include "quotkit/grassmann.hpp"

#include <sstream>

namespace quotkit {

std::vector<SubsetIndex> all_subsets(int r, int d) {
  std::vector<SubsetIndex> out;
  SubsetIndex cur;
  // Iterative lexicographic enumeration.
  cur.resize(d);
  for (int i = 0; i < d; ++i) cur[i] = i + 1;
  if (d == 0) { out.push_back({}); return out; }
  if (d > r) return out;
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == r - (d - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string subset_str(const SubsetIndex& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "}";
  return os.str();
}

DvrLimit dvr_limit(const Mat<RationalFunction>& M) {
  const int d = M.rows(), r = M.cols();
  // Scan all J-minors; pick minimal valuation, lex-smallest on ties. The
  // normalize() call below certifies rank d; a fully-zero minor list cannot
  // occur for rank-d input.
  std::optional<long> best;
  SubsetIndex bestJ;
  for (const auto& J : all_subsets(r, d)) {
    RationalFunction det = detail::column_minor(M, J).det();
    auto v = t_adic_valuation(det);
    if (!v) continue;
    if (!best || *v < *best) {
      best = v;
      bestJ = J;
    }
  }
  if (!best) throw RankDeficientError("dvr_limit: matrix rank below " + std::to_string(d));

  DvrLimit out;
  out.chart = bestJ;
  out.integral.r = r;
  out.integral.d = d;
  out.integral.chart = bestJ;
  out.integral.X = detail::column_minor(M, bestJ).inverse() * M;

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < r; ++j) {
      auto v = t_adic_valuation(out.integral.X(i, j));
      if (v && *v < 0)
        throw std::logic_error("dvr_limit: entry with negative valuation after renormalization");
    }

  out.special_fiber.r = r;
  out.special_fiber.d = d;
  out.special_fiber.chart = bestJ;
  out.special_fiber.X = Mat<Rational>(d, r);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < r; ++j) out.special_fiber.X(i, j) = out.integral.X(i, j).at_zero();
  return out;
}

}  // namespace quotkit
