#include "dwork/linsolve.hpp"

#include <limits>

namespace dwork {

namespace {

using PolyRow = std::vector<Poly>;  // coefficient columns followed by the right-hand side

void make_primitive(PolyRow& row) {
  Poly g;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? e.monic() : gcd(g, e);
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) return;
  Rational scale = 1;
  for (const auto& e : row) {
    if (!e.is_zero()) {
      scale = 1 / e.lc();
      break;
    }
  }
  if (g.degree() > 0) {
    for (auto& e : row)
      if (!e.is_zero()) e = exact_div(e, g);
    // Leading coefficient of first entry changes by 1/lc(g) = 1 (g monic).
  }
  if (scale != 1)
    for (auto& e : row) e *= scale;
}

struct Elimination {
  std::vector<PolyRow> rows;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col) in elimination order
  std::vector<bool> used;
};

Elimination eliminate(const RatFunMatrix& m, const std::vector<RationalFunction>* rhs) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  Elimination e;
  e.rows.resize(nr, PolyRow(nc + 1));
  e.used.assign(nr, false);
  for (std::size_t i = 0; i < nr; ++i) {
    Poly l(1);
    auto absorb = [&l](const RationalFunction& f) {
      if (!f.is_zero() && !f.is_polynomial()) l = exact_div(l * f.den(), gcd(l, f.den()));
    };
    for (std::size_t j = 0; j < nc; ++j) absorb(m(i, j));
    if (rhs) absorb((*rhs)[i]);
    auto cleared = [&l](const RationalFunction& f) {
      if (f.is_zero()) return Poly();
      return f.num() * exact_div(l, f.den());
    };
    for (std::size_t j = 0; j < nc; ++j) e.rows[i][j] = cleared(m(i, j));
    if (rhs) e.rows[i][nc] = cleared((*rhs)[i]);
    make_primitive(e.rows[i]);
  }

  for (std::size_t c = 0; c < nc; ++c) {
    std::size_t best = nr;
    int best_deg = std::numeric_limits<int>::max();
    std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < nr; ++i) {
      if (e.used[i] || e.rows[i][c].is_zero()) continue;
      int deg = e.rows[i][c].degree();
      if (deg > best_deg) continue;
      std::size_t nnz = 0;
      for (const auto& x : e.rows[i])
        if (!x.is_zero()) ++nnz;
      if (deg < best_deg || nnz < best_nnz) {
        best = i;
        best_deg = deg;
        best_nnz = nnz;
      }
    }
    if (best == nr) continue;
    e.used[best] = true;
    e.pivots.emplace_back(best, c);
    const PolyRow& prow = e.rows[best];
    for (std::size_t i = 0; i < nr; ++i) {
      if (e.used[i] || e.rows[i][c].is_zero()) continue;
      PolyRow& row = e.rows[i];
      Poly g = gcd(prow[c], row[c]);
      Poly a = exact_div(prow[c], g);
      Poly b = exact_div(row[c], g);
      for (std::size_t j = 0; j <= nc; ++j) {
        if (row[j].is_zero() && prow[j].is_zero()) continue;
        row[j] = a * row[j] - b * prow[j];
      }
      make_primitive(row);
    }
  }
  return e;
}

}  // namespace

std::optional<std::vector<RationalFunction>> linsolve_ratfun(const RatFunMatrix& m,
                                                             const std::vector<RationalFunction>& rhs) {
  if (rhs.size() != m.rows()) throw UsageError("linsolve: right-hand side length differs from row count");
  const std::size_t nc = m.cols();
  Elimination e = eliminate(m, &rhs);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!e.used[i] && !e.rows[i][nc].is_zero()) return std::nullopt;
  }
  std::vector<RationalFunction> x(nc);
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    const auto [r, c] = *it;
    const PolyRow& row = e.rows[r];
    RationalFunction acc(row[nc]);
    for (std::size_t j = c + 1; j < nc; ++j) {
      if (row[j].is_zero() || x[j].is_zero()) continue;
      acc -= RationalFunction(row[j]) * x[j];
    }
    x[c] = acc / RationalFunction(row[c]);
  }
  return x;
}

std::vector<std::size_t> pivot_columns(const RatFunMatrix& m) {
  Elimination e = eliminate(m, nullptr);
  std::vector<std::size_t> cols;
  cols.reserve(e.pivots.size());
  for (const auto& [r, c] : e.pivots) cols.push_back(c);
  return cols;
}

}  // namespace dwork
