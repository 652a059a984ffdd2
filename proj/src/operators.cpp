#include "dwork/operators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dwork/errors.hpp"

namespace dwork {

std::string variable_name(Variable v) { return v == Variable::Lambda ? "lambda" : "t"; }

namespace {

const char* symbol(Variable v) { return v == Variable::Lambda ? "λ" : "t"; }

void require_totally_nonzero(const CharVector& v, const char* what) {
  if (!is_totally_nonzero(v)) {
    throw DomainError(std::string(what) + ": character vector " + to_string(v) + " is not totally nonzero");
  }
}

// Stirling numbers of the second kind S(j, i) for 0 <= i <= j <= n.
std::vector<std::vector<Rational>> stirling2(int n) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
  s[0][0] = 1;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) s[j][i] = s[j - 1][i - 1] + Rational(i) * s[j - 1][i];
  return s;
}

}  // namespace

DiffOperator::DiffOperator(Variable var, std::vector<Poly> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

void DiffOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOperator DiffOperator::from_graded(Variable var, const std::map<int, Poly>& graded) {
  std::vector<Poly> coeffs;
  for (const auto& [m, q] : graded) {
    if (m < 0) throw UsageError("negative power of the coordinate in a differential operator");
    if (static_cast<int>(coeffs.size()) <= q.degree()) coeffs.resize(static_cast<std::size_t>(q.degree()) + 1);
    for (int j = 0; j <= q.degree(); ++j) coeffs[j] += Poly::monomial(m, q.coeff(j));
  }
  return DiffOperator(var, std::move(coeffs));
}

DiffOperator DiffOperator::twisted(Variable var, const Poly& left, int twist, const Poly& right) {
  std::map<int, Poly> g;
  g[0] += left;
  g[twist] -= right;
  return from_graded(var, g);
}

std::map<int, Poly> DiffOperator::graded() const {
  std::map<int, std::vector<Rational>> acc;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto& c = coeffs_[j].coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (c[m] == 0) continue;
      auto& v = acc[static_cast<int>(m)];
      if (v.size() <= j) v.resize(j + 1);
      v[j] = c[m];
    }
  }
  std::map<int, Poly> out;
  for (auto& [m, v] : acc) out.emplace(m, Poly(std::move(v)));
  return out;
}

DiffOperator& DiffOperator::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  trim();
  return *this;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  if (a.var_ != b.var_) throw UsageError("adding operators in different variables");
  std::vector<Poly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
  return DiffOperator(a.var_, std::move(c));
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator nb = b;
  nb *= Rational(-1);
  return a + nb;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  if (a.var_ != b.var_) throw UsageError("multiplying operators in different variables");
  std::map<int, Poly> out;
  const auto ga = a.graded();
  const auto gb = b.graded();
  for (const auto& [ma, qa] : ga)
    for (const auto& [mb, qb] : gb) out[ma + mb] += qa.shifted(Rational(mb)) * qb;
  return DiffOperator::from_graded(a.var_, out);
}

Poly DworkFactors::left() const { return Poly::from_roots(left_roots); }

Poly DworkFactors::right() const {
  std::vector<Rational> roots;
  for (const auto& a : right_params) roots.push_back(-a);
  return Poly::from_roots(roots);
}

DiffOperator DworkFactors::expand(Variable var) const { return DiffOperator::twisted(var, left(), twist, right()); }

DworkFactors factors_P_prime(const FamilyData& family, const CharVector& v) {
  require_totally_nonzero(v, "build_P_prime");
  DworkFactors f;
  f.twist = family.d;
  for (int k = 0; k < family.d; ++k) f.left_roots.emplace_back(k);
  for (int i = 0; i < family.n; ++i) {
    for (int j = 0; j < family.w[i]; ++j) {
      f.right_params.push_back(make_rational(v.tilde[i] + j * family.d, family.w[i]));
    }
  }
  std::sort(f.right_params.begin(), f.right_params.end());
  return f;
}

DworkFactors factors_P(const FamilyData& family, const CharVector& v) {
  DworkFactors f = factors_P_prime(family, v);
  for (int k : index_set_I(family, v)) {
    auto l = std::find(f.left_roots.begin(), f.left_roots.end(), Rational(k));
    auto r = std::find(f.right_params.begin(), f.right_params.end(), Rational(family.d - k));
    if (l == f.left_roots.end() || r == f.right_params.end()) {
      throw std::logic_error("reduce_P: no matching factor pair for k = " + std::to_string(k));
    }
    f.left_roots.erase(l);
    f.right_params.erase(r);
  }
  return f;
}

DiffOperator build_P_prime(const FamilyData& family, const CharVector& v) {
  return factors_P_prime(family, v).expand();
}

DiffOperator reduce_P(const FamilyData& family, const CharVector& v) {
  const DworkFactors full = factors_P_prime(family, v);
  Poly left = full.left();
  Poly right = full.right();
  // Both halves are polynomials in D alone; (D - k) λ^d = λ^d (D + d - k)
  // turns the left factor into the matching right one.
  for (int k : index_set_I(family, v)) {
    left = exact_div(left, Poly(std::vector<Rational>{Rational(-k), 1}));
    right = exact_div(right, Poly(std::vector<Rational>{Rational(family.d - k), 1}));
  }
  DiffOperator op = DiffOperator::twisted(Variable::Lambda, left, family.d, right);
  if (op != factors_P(family, v).expand()) throw std::logic_error("reduce_P: factored and divided forms disagree");
  return op;
}

HypParams build_hyp_prime(const FamilyData& family, const CharVector& v) {
  require_totally_nonzero(v, "build_hyp_prime");
  HypParams h;
  const Rational shift = make_rational(v.N, family.d);
  for (int k = 0; k < family.d; ++k) h.alphas.push_back(make_rational(k, family.d) + shift);
  for (int i = 0; i < family.n; ++i) {
    const long wi = family.w[i];
    for (long j = 0; j < wi; ++j) {
      h.betas.push_back(make_rational((wi - j) * family.d - v.tilde[i], wi * family.d) + shift);
    }
  }
  std::sort(h.alphas.begin(), h.alphas.end());
  std::sort(h.betas.begin(), h.betas.end());
  return h;
}

namespace {

bool congruent_mod_z(const Rational& a, const Rational& b) {
  Rational diff = a - b;
  return diff.get_den() == 1;
}

}  // namespace

HypParams cancel(const HypParams& h) {
  if (h.alphas.size() != h.betas.size()) throw UsageError("cancel: parameter lists of different length");
  HypParams out;
  std::vector<Rational> betas = h.betas;
  std::sort(betas.begin(), betas.end());
  std::vector<Rational> alphas = h.alphas;
  std::sort(alphas.begin(), alphas.end());
  for (const auto& a : alphas) {
    auto it = std::find_if(betas.begin(), betas.end(), [&a](const Rational& b) { return congruent_mod_z(a, b); });
    if (it != betas.end()) {
      betas.erase(it);
    } else {
      out.alphas.push_back(a);
    }
  }
  out.betas = std::move(betas);
  return out;
}

bool is_irreducible(const HypParams& h) {
  for (const auto& a : h.alphas)
    for (const auto& b : h.betas)
      if (congruent_mod_z(a, b)) return false;
  return true;
}

DiffOperator expand(const HypParams& h) {
  std::vector<Rational> left_roots;
  for (const auto& b : h.betas) left_roots.push_back(1 - b);
  std::vector<Rational> right_roots;
  for (const auto& a : h.alphas) right_roots.push_back(-a);
  return DiffOperator::twisted(Variable::T, Poly::from_roots(left_roots), 1, Poly::from_roots(right_roots));
}

CompanionMatrix to_companion(const DiffOperator& op) {
  if (op.is_zero()) throw DomainError("to_companion: zero operator");
  const int r = op.order();
  const auto s = stirling2(r);
  // D^j = Σ_i S(j, i) λ^i (d/dλ)^i.
  std::vector<Poly> plain(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (s[j][i] == 0) continue;
      plain[i] += (op.coeffs()[j] * s[j][i]).times_x_power(i);
    }
  }
  if (plain[r].is_zero()) throw DomainError("to_companion: leading coefficient vanishes");
  CompanionMatrix c;
  c.r = static_cast<std::size_t>(r);
  c.entries = RatFunMatrix(c.r, c.r);
  for (std::size_t i = 0; i + 1 < c.r; ++i) c.entries(i + 1, i) = RationalFunction(1);
  for (std::size_t i = 0; i < c.r; ++i) c.entries(i, c.r - 1) = -RationalFunction(plain[i], plain[r]);
  return c;
}

TruncSeries apply_operator(const DiffOperator& op, const TruncSeries& s) {
  const std::size_t n = s.order();
  TruncSeries out(n);
  TruncSeries power = s;  // D^j s
  for (int j = 0; j <= op.order(); ++j) {
    if (j > 0) {
      for (std::size_t k = 0; k < n; ++k) power[k] *= static_cast<unsigned long>(k);
    }
    const Poly& c = op.coeffs()[j];
    for (int m = 0; m <= c.degree(); ++m) {
      const Rational cm = c.coeff(m);
      if (cm == 0) continue;
      for (std::size_t k = 0; k + m < n; ++k) {
        if (power[k] != 0) out[k + m] += cm * power[k];
      }
    }
  }
  return out;
}

DiffOperator conjugate(const DiffOperator& op, long N) {
  std::map<int, Poly> g;
  for (const auto& [m, q] : op.graded()) g[m] = q.shifted(Rational(-N));
  return DiffOperator::from_graded(op.variable(), g);
}

DiffOperator rescale_to_t(const DiffOperator& op, int d) {
  if (d <= 0) throw UsageError("rescale_to_t: d must be positive");
  if (op.is_zero()) return DiffOperator(Variable::T);
  const auto g = op.graded();
  int top = 0;
  for (const auto& [m, q] : g) {
    if (m % d != 0) throw DomainError("rescale_to_t: λ-exponent not divisible by d");
    top = std::max(top, m / d);
  }
  std::map<int, Poly> out;
  for (const auto& [m, q] : g) out[top - m / d] = q.scaled_arg(Rational(-d));
  const Rational lead = out.at(0).lc();
  for (auto& [m, q] : out) q *= 1 / lead;
  return DiffOperator::from_graded(Variable::T, out);
}

DiffOperator conjugate_and_rescale(const DiffOperator& op, long N, int d) {
  return rescale_to_t(conjugate(op, N), d);
}

std::string to_text(const DiffOperator& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = op.order(); j >= 0; --j) {
    const Poly& c = op.coeffs()[j];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c, symbol(op.variable())) << ")";
    if (j > 0) os << "*D" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

namespace {

// shifts are the c in (D + c), grouped with multiplicities.
std::string factor_product(const std::vector<Rational>& shifts, bool descending) {
  std::vector<Rational> s = shifts;
  std::sort(s.begin(), s.end());
  if (descending) std::reverse(s.begin(), s.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    const std::size_t mult = j - i;
    if (s[i] == 0) {
      os << (mult > 1 ? "D^" + std::to_string(mult) : std::string("D"));
    } else {
      os << "(D " << (s[i] > 0 ? "+ " : "- ") << to_string(Rational(abs(s[i]))) << ")";
      if (mult > 1) os << "^" << mult;
    }
    i = j;
  }
  return s.empty() ? "1" : os.str();
}

}  // namespace

std::string to_text(const DworkFactors& f, Variable var) {
  std::vector<Rational> left;
  for (const auto& k : f.left_roots) left.push_back(-k);
  std::string sym = symbol(var);
  return factor_product(left, true) + " - " + sym + (f.twist != 1 ? "^" + std::to_string(f.twist) : "") +
         factor_product(f.right_params, false);
}

std::string to_text(const HypParams& h) {
  std::ostringstream os;
  os << "Hyp(";
  for (std::size_t i = 0; i < h.alphas.size(); ++i) os << (i ? ", " : "") << to_string(h.alphas[i]);
  os << "; ";
  for (std::size_t i = 0; i < h.betas.size(); ++i) os << (i ? ", " : "") << to_string(h.betas[i]);
  os << "; t)";
  return os.str();
}

}  // namespace dwork
