#include "dwork/homog_poly.hpp"

#include <numeric>
#include <sstream>

#include "dwork/errors.hpp"

namespace dwork {

namespace {

void fill(int nvars, int remaining, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    fill(nvars, remaining - k, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars <= 0 || degree < 0) return out;
  Exponent cur(static_cast<std::size_t>(nvars), 0);
  fill(nvars, degree, 0, cur, out);
  return out;
}

HomogPoly HomogPoly::monomial(const Exponent& e, const RationalFunction& c) {
  HomogPoly p(static_cast<int>(e.size()), std::accumulate(e.begin(), e.end(), 0));
  p.add_term(e, c);
  return p;
}

RationalFunction HomogPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void HomogPoly::add_term(const Exponent& e, const RationalFunction& c) {
  if (static_cast<int>(e.size()) != nvars_ || std::accumulate(e.begin(), e.end(), 0) != degree_) {
    throw UsageError("exponent vector does not match homogeneous degree");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomogPoly HomogPoly::partial(int i) const {
  HomogPoly out(nvars_, degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    out.add_term(f, c * RationalFunction(Rational(e[i])));
  }
  return out;
}

HomogPoly HomogPoly::lambda_derivative() const {
  HomogPoly out(nvars_, degree_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.derivative());
  return out;
}

HomogPoly HomogPoly::scaled(const RationalFunction& c) const {
  HomogPoly out(nvars_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  if (o.nvars_ != nvars_ || o.degree_ != degree_) throw UsageError("adding polynomials of different degree");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("multiplying polynomials in different variable counts");
  HomogPoly out(a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string to_string(const HomogPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(it->second) << ")";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*X" << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

}  // namespace dwork
