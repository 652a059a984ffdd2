#include "dwork/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "dwork/errors.hpp"
#include "dwork/linsolve.hpp"

namespace dwork {

void CohomClass::add(int pole, const HomogPoly& numerator) {
  if (numerator.is_zero()) return;
  auto [it, inserted] = terms.emplace(pole, numerator);
  if (!inserted) {
    it->second += numerator;
    if (it->second.is_zero()) terms.erase(it);
  }
}

CohomClass operator+(CohomClass a, const CohomClass& b) {
  for (const auto& [p, num] : b.terms) a.add(p, num);
  return a;
}

CohomClass scaled(const CohomClass& c, const RationalFunction& f) {
  CohomClass out{c.n, c.d, {}};
  if (f.is_zero()) return out;
  for (const auto& [p, num] : c.terms) out.terms.emplace(p, num.scaled(f));
  return out;
}

CohomClass omega_class(const FamilyData& family, const CharVector& v) {
  if (!is_totally_nonzero(v)) throw DomainError("omega_class: character vector " + to_string(v) + " is not totally nonzero");
  Exponent e;
  for (int t : v.tilde) e.push_back(t - 1);
  CohomClass c{family.n, family.d, {}};
  c.add(static_cast<int>(v.deg), HomogPoly::monomial(e, RationalFunction(1)));
  return c;
}

CohomClass apply_D_lambda(const FamilyData& family, const CohomClass& c) {
  const RationalFunction lambda(Poly::x());
  const Exponent w(family.w.begin(), family.w.end());
  const HomogPoly xw = HomogPoly::monomial(w, RationalFunction(1));
  CohomClass out{c.n, c.d, {}};
  for (const auto& [p, num] : c.terms) {
    out.add(p, num.lambda_derivative().scaled(lambda));
    out.add(p + 1, (num * xw).scaled(lambda * RationalFunction(Rational(p * family.d))));
  }
  return out;
}

struct JacobianBasisCache::Block {
  std::vector<Exponent> rows;
  std::map<Exponent, std::size_t> row_index;
  std::vector<std::pair<int, Exponent>> cols;  // (i, b) ↦ X^b ∂Q/∂X_i
  RatFunMatrix m;
  std::vector<std::size_t> basis_cols;  // indices into cols spanning J in this block
  std::vector<std::size_t> complement;  // row indices completing a basis
  RatFunMatrix square;                  // [M_basis | I_complement]
};

struct JacobianBasisCache::Degree {
  std::map<std::vector<int>, std::vector<Exponent>> rows;
  std::map<std::vector<int>, std::vector<std::pair<int, Exponent>>> cols;
  std::map<std::vector<int>, std::unique_ptr<Block>> blocks;
};

JacobianBasisCache::JacobianBasisCache(FamilyData family, std::size_t max_block_rows)
    : family_(std::move(family)), max_block_rows_(max_block_rows) {}

JacobianBasisCache::~JacobianBasisCache() = default;

std::vector<int> JacobianBasisCache::key_of(const Exponent& e) const {
  const int d = family_.d;
  std::vector<int> best;
  std::vector<int> cur(e.size());
  for (int r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < e.size(); ++i) cur[i] = (e[i] + 1 + r * family_.w[i]) % d;
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

const JacobianBasisCache::Block& JacobianBasisCache::block(int degree, const std::vector<int>& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = degrees_[degree];
  if (!slot) {
    slot = std::make_unique<Degree>();
    for (const auto& e : monomials_of_degree(family_.n, degree)) slot->rows[key_of(e)].push_back(e);
    const int bdeg = degree - (family_.d - 1);
    for (const auto& b : monomials_of_degree(family_.n, bdeg)) {
      for (int i = 0; i < family_.n; ++i) {
        Exponent lead = b;
        lead[i] += family_.d - 1;
        slot->cols[key_of(lead)].emplace_back(i, b);
      }
    }
  }
  auto& entry = slot->blocks[key];
  if (entry) return *entry;

  auto blk = std::make_unique<Block>();
  if (auto it = slot->rows.find(key); it != slot->rows.end()) blk->rows = it->second;
  if (blk->rows.size() > max_block_rows_) {
    throw ResourceCapExceeded("Jacobian block in degree " + std::to_string(degree) + " has " +
                              std::to_string(blk->rows.size()) + " monomials, above the cap of " +
                              std::to_string(max_block_rows_));
  }
  if (auto it = slot->cols.find(key); it != slot->cols.end()) blk->cols = it->second;
  for (std::size_t r = 0; r < blk->rows.size(); ++r) blk->row_index.emplace(blk->rows[r], r);

  const std::size_t nr = blk->rows.size();
  const std::size_t nc = blk->cols.size();
  const int d = family_.d;
  blk->m = RatFunMatrix(nr, nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& [i, b] = blk->cols[c];
    const long wi = family_.w[i];
    // ∂Q/∂X_i = d w_i X_i^(d-1) - d λ w_i X^(W - e_i)
    Exponent a = b;
    a[i] += d - 1;
    blk->m(blk->row_index.at(a), c) += RationalFunction(Rational(d * wi));
    Exponent t = b;
    for (int k = 0; k < family_.n; ++k) t[k] += family_.w[k];
    --t[i];
    blk->m(blk->row_index.at(t), c) += RationalFunction(Poly::monomial(1, Rational(-d * wi)));
  }

  RatFunMatrix ext(nr, nc + nr);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) ext(r, c) = blk->m(r, c);
    ext(r, nc + r) = RationalFunction(1);
  }
  for (std::size_t c : pivot_columns(ext)) {
    if (c < nc) {
      blk->basis_cols.push_back(c);
    } else {
      blk->complement.push_back(c - nc);
    }
  }
  std::sort(blk->complement.begin(), blk->complement.end());
  blk->square = RatFunMatrix(nr, nr);
  for (std::size_t k = 0; k < blk->basis_cols.size(); ++k)
    for (std::size_t r = 0; r < nr; ++r) blk->square(r, k) = blk->m(r, blk->basis_cols[k]);
  for (std::size_t s = 0; s < blk->complement.size(); ++s)
    blk->square(blk->complement[s], blk->basis_cols.size() + s) = RationalFunction(1);

  entry = std::move(blk);
  return *entry;
}

namespace {

// Splits a numerator into its character blocks.
template <class KeyFn>
std::map<std::vector<int>, std::vector<std::pair<Exponent, RationalFunction>>> split(const HomogPoly& a, KeyFn key) {
  std::map<std::vector<int>, std::vector<std::pair<Exponent, RationalFunction>>> out;
  for (const auto& [e, c] : a.terms()) out[key(e)].emplace_back(e, c);
  return out;
}

// Adds coefficient · (1/(p-1)) ∂(X^b)/∂X_i to `lower`.
void push_down(HomogPoly& lower, int i, const Exponent& b, const RationalFunction& coeff, int p) {
  if (b[i] == 0 || coeff.is_zero()) return;
  Exponent e = b;
  --e[i];
  lower.add_term(e, coeff * RationalFunction(make_rational(b[i], p - 1)));
}

}  // namespace

std::optional<CohomClass> JacobianBasisCache::griffiths_reduce_step(const CohomClass& c, int p) const {
  if (p < 2) throw UsageError("griffiths_reduce_step: pole order must be at least 2");
  auto it = c.terms.find(p);
  if (it == c.terms.end()) return c;
  if (p != c.top_pole_order()) throw UsageError("griffiths_reduce_step: p must be the top pole order");
  const int n = family_.n;
  const int d = family_.d;
  HomogPoly lower(n, (p - 1) * d - n);
  for (const auto& [key, terms] : split(it->second, [this](const Exponent& e) { return key_of(e); })) {
    const Block& blk = block(it->second.degree(), key);
    std::vector<RationalFunction> rhs(blk.rows.size());
    for (const auto& [e, coeff] : terms) rhs[blk.row_index.at(e)] = coeff;
    auto x = linsolve_ratfun(blk.m, rhs);
    if (!x) return std::nullopt;
    for (std::size_t col = 0; col < blk.cols.size(); ++col) {
      push_down(lower, blk.cols[col].first, blk.cols[col].second, (*x)[col], p);
    }
  }
  CohomClass out = c;
  out.terms.erase(p);
  out.add(p - 1, lower);
  return out;
}

CohomClass JacobianBasisCache::normal_form(const CohomClass& c) const {
  const int n = family_.n;
  const int d = family_.d;
  CohomClass out = c;
  for (int p = out.top_pole_order(); p >= 2; --p) {
    auto it = out.terms.find(p);
    if (it == out.terms.end()) continue;
    const HomogPoly a = it->second;
    HomogPoly lower(n, (p - 1) * d - n);
    HomogPoly rest(n, a.degree());
    for (const auto& [key, terms] : split(a, [this](const Exponent& e) { return key_of(e); })) {
      const Block& blk = block(a.degree(), key);
      if (blk.basis_cols.empty()) {
        for (const auto& [e, coeff] : terms) rest.add_term(e, coeff);
        continue;
      }
      std::vector<RationalFunction> rhs(blk.rows.size());
      for (const auto& [e, coeff] : terms) rhs[blk.row_index.at(e)] = coeff;
      auto x = linsolve_ratfun(blk.square, rhs);
      if (!x) throw std::logic_error("normal_form: complement system is singular");
      const std::size_t nb = blk.basis_cols.size();
      for (std::size_t k = 0; k < nb; ++k) {
        const auto& [i, b] = blk.cols[blk.basis_cols[k]];
        push_down(lower, i, b, (*x)[k], p);
      }
      for (std::size_t s = 0; s < blk.complement.size(); ++s) {
        rest.add_term(blk.rows[blk.complement[s]], (*x)[nb + s]);
      }
    }
    out.terms.erase(p);
    out.add(p, rest);
    out.add(p - 1, lower);
  }
  return out;
}

bool JacobianBasisCache::is_zero_class(const CohomClass& c) const { return normal_form(c).empty(); }

VerifyReport verify_annihilation_report(const JacobianBasisCache& cache, const CharVector& v, const DiffOperator& op) {
  const FamilyData& family = cache.family();
  if (op.variable() != Variable::Lambda) throw UsageError("verify_annihilation: operator must be in λ");
  VerifyReport report;
  CohomClass power = cache.normal_form(omega_class(family, v));
  report.top_pole_order = static_cast<int>(v.deg);
  CohomClass acc{family.n, family.d, {}};
  for (int j = 0; j <= op.order(); ++j) {
    if (j > 0) {
      CohomClass raw = apply_D_lambda(family, power);
      report.top_pole_order = std::max(report.top_pole_order, raw.top_pole_order());
      power = cache.normal_form(raw);
    }
    const Poly& cj = op.coeffs()[j];
    if (!cj.is_zero()) acc = acc + scaled(power, RationalFunction(cj));
  }
  report.annihilates = cache.normal_form(acc).empty();
  return report;
}

bool verify_annihilation(const FamilyData& family, const CharVector& v, const DiffOperator& op) {
  JacobianBasisCache cache(family);
  return verify_annihilation_report(cache, v, op).annihilates;
}

}  // namespace dwork
