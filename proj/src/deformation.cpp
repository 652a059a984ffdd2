#include "dwork/deformation.hpp"

#include <algorithm>
#include <numeric>

#include "dwork/errors.hpp"
#include "dwork/linsolve.hpp"

namespace dwork {

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, std::size_t order)
    : rows_(rows), cols_(cols), order_(order), entries_(rows * cols, TruncSeries(order)) {}

SeriesMatrix SeriesMatrix::identity(std::size_t n, std::size_t order) {
  return constant(RationalMatrix::identity(n), order);
}

SeriesMatrix SeriesMatrix::constant(const RationalMatrix& m, std::size_t order) {
  SeriesMatrix out(m.rows(), m.cols(), order);
  if (order == 0) return out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j)[0] = m(i, j);
  return out;
}

SeriesMatrix SeriesMatrix::from_rational(const RatFunMatrix& m, std::size_t order) {
  SeriesMatrix out(m.rows(), m.cols(), order);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_series(order);
  return out;
}

RationalMatrix SeriesMatrix::coefficient(std::size_t k) const {
  RationalMatrix out(rows_, cols_, Rational(0));
  if (k >= order_) throw UsageError("series matrix coefficient beyond truncation order");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j)[k];
  return out;
}

bool SeriesMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

SeriesMatrix SeriesMatrix::truncated(std::size_t order) const {
  SeriesMatrix out(rows_, cols_, order);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].truncated(order);
  return out;
}

namespace {

void require_same_shape(const SeriesMatrix& a, const SeriesMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.order() != b.order()) {
    throw UsageError(std::string(what) + ": shapes or truncation orders differ");
  }
}

}  // namespace

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& o) {
  require_same_shape(*this, o, "series matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& o) {
  require_same_shape(*this, o, "series matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols_ != b.rows_ || a.order_ != b.order_) throw UsageError("series matrix product: incompatible shapes");
  SeriesMatrix out(a.rows_, b.cols_, a.order_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += series_mul(a(i, k), b(k, j));
      }
    }
  return out;
}

SeriesMatrix operator*(const RationalMatrix& a, const SeriesMatrix& b) {
  if (a.cols() != b.rows_) throw UsageError("series matrix product: incompatible shapes");
  SeriesMatrix out(a.rows(), b.cols_, b.order_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += b(k, j) * a(i, k);
    }
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows()) throw UsageError("series matrix product: incompatible shapes");
  SeriesMatrix out(a.rows_, b.cols(), a.order_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
      }
  return out;
}

SeriesMatrix derive(const SeriesMatrix& m) {
  const std::size_t order = m.order() == 0 ? 0 : m.order() - 1;
  SeriesMatrix out(m.rows(), m.cols(), order);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = series_derive(m(i, j));
  return out;
}

SeriesMatrix inverse(const SeriesMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse of a non-square series matrix");
  const std::size_t n = m.rows();
  const std::size_t order = m.order();
  if (order == 0) return SeriesMatrix(n, n, 0);
  RationalMatrix x0;
  try {
    x0 = inverse(m.value_at_zero());
  } catch (const DomainError&) {
    throw NonUnitError("series matrix has singular constant term");
  }
  std::vector<RationalMatrix> a(order);
  for (std::size_t k = 0; k < order; ++k) a[k] = m.coefficient(k);
  std::vector<RationalMatrix> x(order);
  x[0] = x0;
  for (std::size_t k = 1; k < order; ++k) {
    RationalMatrix acc(n, n, Rational(0));
    for (std::size_t i = 1; i <= k; ++i) acc = acc + a[i] * x[k - i];
    x[k] = RationalMatrix(n, n, Rational(0)) - x0 * acc;
  }
  SeriesMatrix out(n, n, order);
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j)[k] = x[k](i, j);
  return out;
}

SeriesMatrix substitute_power(const SeriesMatrix& m, unsigned p, std::size_t order) {
  SeriesMatrix out(m.rows(), m.cols(), order);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute_power(m(i, j), p, order);
  return out;
}

SeriesMatrix shift_up(const SeriesMatrix& m, std::size_t k) {
  SeriesMatrix out(m.rows(), m.cols(), m.order());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = shift_up(m(i, j), k);
  return out;
}

SeriesMatrix solve_right_ode(const RationalMatrix& x0, const SeriesMatrix& c) {
  if (x0.cols() != c.rows() || c.rows() != c.cols()) throw UsageError("solve_right_ode: incompatible shapes");
  const std::size_t order = c.order() + 1;
  std::vector<RationalMatrix> cc(c.order());
  for (std::size_t k = 0; k < c.order(); ++k) cc[k] = c.coefficient(k);
  std::vector<RationalMatrix> x(order);
  x[0] = x0;
  for (std::size_t k = 0; k + 1 < order; ++k) {
    RationalMatrix acc(x0.rows(), x0.cols(), Rational(0));
    for (std::size_t i = 0; i <= k; ++i) acc = acc + x[i] * cc[k - i];
    for (std::size_t i = 0; i < acc.rows(); ++i)
      for (std::size_t j = 0; j < acc.cols(); ++j) acc(i, j) /= static_cast<unsigned long>(k + 1);
    x[k + 1] = acc;
  }
  SeriesMatrix out(x0.rows(), x0.cols(), order);
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t i = 0; i < x0.rows(); ++i)
      for (std::size_t j = 0; j < x0.cols(); ++j) out(i, j)[k] = x[k](i, j);
  return out;
}

SolutionBasis fundamental_solutions(const FamilyData& family, const CharVector& v, std::size_t order) {
  const DworkFactors f = factors_P(family, v);
  const int d = family.d;
  std::vector<int> ks;
  for (const auto& k : f.left_roots) ks.push_back(static_cast<int>(k.get_num().get_si()));
  std::sort(ks.begin(), ks.end());
  const std::size_t r = ks.size();
  const bool cyclic = cyclic_basis_expected(family, v);

  SolutionBasis basis;
  basis.exponents = ks;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> upper;
    for (const auto& a : f.right_params) upper.push_back((a + ks[i]) / d);
    std::vector<Rational> lower;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      Rational b = 1 + make_rational(ks[i] - ks[j], d);
      if (b <= 0 && b.get_den() == 1) {
        throw UnsupportedCase("fundamental_solutions: lower parameter " + to_string(b) + " is a nonpositive integer");
      }
      lower.push_back(b);
    }
    Rational lead = 1;
    if (cyclic) {
      for (int t = 2; t <= ks[i]; ++t) lead /= t;
    }
    TruncSeries s(order);
    Rational a = lead;
    for (long m = 0;; ++m) {
      const std::size_t pos = static_cast<std::size_t>(ks[i]) + static_cast<std::size_t>(d) * m;
      if (pos >= order) break;
      if (m > 0) {
        Rational num = 1;
        for (const auto& u : upper) num *= u + (m - 1);
        Rational den = m;
        for (const auto& l : lower) den *= l + (m - 1);
        a = a * num / den;
      }
      s[pos] = a;
      if (a == 0) break;
    }
    basis.leading.push_back(lead);
    basis.solutions.push_back(std::move(s));
  }
  return basis;
}

SeriesMatrix wronskian(const SolutionBasis& basis) {
  const std::size_t r = basis.solutions.size();
  if (r == 0) return SeriesMatrix();
  const std::size_t order = basis.solutions[0].order();
  if (order < r) throw UsageError("wronskian: truncation order below the number of solutions");
  const std::size_t out_order = order - (r - 1);
  SeriesMatrix w(r, r, out_order);
  for (std::size_t i = 0; i < r; ++i) {
    TruncSeries s = basis.solutions[i];
    for (std::size_t j = 0; j < r; ++j) {
      if (j > 0) s = series_derive(s);
      w(i, j) = s.truncated(out_order);
    }
  }
  return w;
}

SeriesMatrix deformation_matrix(const FamilyData& family, const CharVector& v, std::size_t order) {
  const std::size_t r = static_cast<std::size_t>(rank(family, v));
  const SeriesMatrix w = wronskian(fundamental_solutions(family, v, order + r - 1));
  RationalMatrix w0_inv;
  try {
    w0_inv = inverse(w.value_at_zero());
  } catch (const DomainError&) {
    throw CyclicBasisFails("W(0) is singular for V = " + to_string(v) + "; ω_V and its derivatives are no basis at 0",
                           w);
  }
  return w0_inv * w;
}

RatFunMatrix gauge_transform(const RatFunMatrix& c, const RatFunMatrix& b) {
  const RatFunMatrix b_inv = inverse(b);
  return b_inv * c * b + b_inv * derivative(b);
}

bool is_nilpotent(const RationalMatrix& m) {
  RationalMatrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
  return p == RationalMatrix(m.rows(), m.cols(), Rational(0));
}

namespace {

using Column = std::vector<TruncSeries>;

std::size_t column_order(const Column& c) { return c.empty() ? 0 : c[0].order(); }

Column truncate(const Column& c, std::size_t order) {
  Column out;
  for (const auto& s : c) out.push_back(s.truncated(order));
  return out;
}

std::optional<std::size_t> column_valuation(const Column& c) {
  std::optional<std::size_t> best;
  for (const auto& s : c) {
    auto v = s.valuation();
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

RationalFunction lambda_power(long m, const Rational& c) {
  if (m >= 0) return RationalFunction(Poly::monomial(static_cast<int>(m), c));
  return RationalFunction(Poly(c), Poly::monomial(static_cast<int>(-m), 1));
}

}  // namespace

CorrectedBasis canonical_correction(const SeriesMatrix& w, const RatFunMatrix& companion) {
  const std::size_t r = w.rows();
  std::vector<Column> chosen;
  std::vector<std::vector<Rational>> chosen0;
  RatFunMatrix b(r, r);

  for (std::size_t j = 0; j < r; ++j) {
    Column cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = w(i, j);
    std::vector<RationalFunction> bcol(r);
    bcol[j] = RationalFunction(1);
    bool eliminated = false;
    while (true) {
      auto m = column_valuation(cur);
      if (!m) throw UnsupportedCase("canonical_correction: column vanishes to the truncation order");
      std::vector<Rational> lead(r);
      for (std::size_t i = 0; i < r; ++i) lead[i] = cur[i][*m];

      std::optional<std::vector<RationalFunction>> combo;
      if (!chosen0.empty()) {
        RatFunMatrix sys(r, chosen0.size());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t l = 0; l < chosen0.size(); ++l) sys(i, l) = RationalFunction(chosen0[l][i]);
        std::vector<RationalFunction> rhs;
        for (const auto& x : lead) rhs.emplace_back(x);
        combo = linsolve_ratfun(sys, rhs);
      }
      if (!combo) {
        Rational c = 1;
        if (*m != 0 || eliminated) c = *std::find_if(lead.begin(), lead.end(), [](const Rational& x) { return x != 0; });
        Column v;
        for (const auto& s : cur) v.push_back(shift_down(s, *m) * (1 / c));
        for (auto& e : bcol) e = e * lambda_power(-static_cast<long>(*m), 1 / c);
        chosen.push_back(std::move(v));
        chosen0.push_back(lead);
        for (auto& x : chosen0.back()) x /= c;
        for (std::size_t i = 0; i < r; ++i) b(i, j) = bcol[i];
        break;
      }
      eliminated = true;
      for (std::size_t l = 0; l < chosen.size(); ++l) {
        const Rational cl = (*combo)[l].value_at_zero();
        if (cl == 0) continue;
        const std::size_t ord = std::min(column_order(cur), column_order(chosen[l]));
        cur = truncate(cur, ord);
        for (std::size_t i = 0; i < r; ++i) cur[i] -= shift_up(chosen[l][i].truncated(ord), *m) * cl;
        for (std::size_t i = 0; i < r; ++i) bcol[i] -= b(i, l) * lambda_power(static_cast<long>(*m), cl);
      }
    }
  }

  std::size_t order = w.order();
  for (const auto& c : chosen) order = std::min(order, column_order(c));
  SeriesMatrix m(r, r, order);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = chosen[j][i].truncated(order);

  RationalMatrix m0_inv;
  try {
    m0_inv = inverse(m.value_at_zero());
  } catch (const DomainError&) {
    throw UnsupportedCase("canonical_correction: corrected basis is still singular at 0");
  }
  CorrectedBasis out;
  out.change.b = b;
  out.a = m0_inv * m;
  out.connection = gauge_transform(companion, b);
  RationalMatrix c0(r, r, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (!out.connection(i, j).regular_at_zero()) {
        throw UnsupportedCase("canonical_correction: transformed connection has a pole at 0");
      }
      c0(i, j) = out.connection(i, j).value_at_zero();
    }
  if (!is_nilpotent(c0)) throw UnsupportedCase("canonical_correction: residue of the new connection is not nilpotent");
  return out;
}

Deformation compute_deformation(const FamilyData& family, const CharVector& v, std::size_t order) {
  const std::size_t r = static_cast<std::size_t>(rank(family, v));
  const RatFunMatrix c = to_companion(reduce_P(family, v)).entries;
  Deformation out;
  if (cyclic_basis_expected(family, v)) {
    out.basis = fundamental_solutions(family, v, order + r - 1);
    out.wronskian = wronskian(out.basis);
    out.a = inverse(out.wronskian.value_at_zero()) * out.wronskian;
    out.connection = c;
    return out;
  }
  // Dividing columns by powers of λ costs truncation order; compute with headroom.
  const std::size_t margin = static_cast<std::size_t>(family.d) * r;
  out.basis = fundamental_solutions(family, v, order + r - 1 + margin);
  const SeriesMatrix w = wronskian(out.basis);
  CorrectedBasis cb = canonical_correction(w, c);
  if (cb.a.order() < order) throw UnsupportedCase("compute_deformation: basis correction exceeded the order margin");
  out.wronskian = w.truncated(order);
  out.a = cb.a.truncated(order);
  out.connection = cb.connection;
  out.change = cb.change;
  return out;
}

FrobeniusResult frobenius_matrix(const FamilyData& family, const SeriesMatrix& a_v, const SeriesMatrix& a_v1,
                                 const RationalMatrix& f0, long p, std::size_t order) {
  if (!is_prime(p)) throw DomainError("frobenius_matrix: p = " + std::to_string(p) + " is not prime");
  long prod = family.d;
  for (int w : family.w) prod = std::lcm(prod, static_cast<long>(w));
  if (std::gcd(prod, p) != 1) {
    throw DomainError("frobenius_matrix: p = " + std::to_string(p) + " divides d·w_1⋯w_n");
  }
  if (f0.rows() != a_v.rows() || f0.cols() != a_v1.rows()) throw UsageError("frobenius_matrix: F0 has the wrong shape");
  const std::size_t need1 = (order + static_cast<std::size_t>(p) - 1) / static_cast<std::size_t>(p);
  if (a_v.order() < order || a_v1.order() < need1) throw UsageError("frobenius_matrix: deformation matrices too short");
  FrobeniusResult out;
  out.p = p;
  out.f0 = f0;
  const SeriesMatrix twisted = substitute_power(a_v1, static_cast<unsigned>(p), order);
  out.f = inverse(a_v.truncated(order)) * (f0 * twisted);
  return out;
}

SeriesMatrix horizontality_residual(const SeriesMatrix& f, const RatFunMatrix& c_v, const RatFunMatrix& c_v1, long p) {
  if (f.order() == 0) return f;
  const std::size_t order = f.order() - 1;
  const SeriesMatrix ft = f.truncated(order);
  RatFunMatrix c1p(c_v1.rows(), c_v1.cols());
  for (std::size_t i = 0; i < c_v1.rows(); ++i)
    for (std::size_t j = 0; j < c_v1.cols(); ++j) c1p(i, j) = c_v1(i, j).compose_power(static_cast<unsigned>(p));
  SeriesMatrix rhs = shift_up(ft * SeriesMatrix::from_rational(c1p, order), static_cast<std::size_t>(p - 1));
  rhs *= Rational(p);
  return derive(f) + SeriesMatrix::from_rational(c_v, order) * ft - rhs;
}

std::vector<PadicMatrix> reduce_mod_p(const SeriesMatrix& m, const Integer& p, unsigned precision) {
  std::vector<PadicMatrix> out;
  for (std::size_t k = 0; k < m.order(); ++k) out.push_back(reduce_mod_p(m.coefficient(k), p, precision));
  return out;
}

}  // namespace dwork
