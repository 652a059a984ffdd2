#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dwork/rational.hpp"
#include "dwork/series.hpp"

namespace dwork {

/// Dense univariate polynomial over ℚ, coefficients in increasing degree,
/// with no trailing zeros. Used both for polynomials in λ (or t) and for
/// polynomials in the Euler operator D.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x() { return monomial(1, 1); }
  static Poly monomial(int k, const Rational& c);
  // Π (x - r) over the given roots.
  static Poly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& lc() const { return coeffs_.back(); }
  // Index of the lowest nonzero coefficient; -1 for zero.
  int low_degree() const;

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly shifted(const Rational& c) const;      // p(x + c)
  Poly scaled_arg(const Rational& c) const;   // p(c·x)
  Poly compose_power(unsigned p) const;       // p(x^p)
  Poly monic() const;
  Poly times_x_power(int k) const;
  TruncSeries to_series(std::size_t order) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Exact quotient; throws DomainError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned e);

std::string to_string(const Poly& p, std::string_view var = "x");

/// Element of ℚ(λ) kept in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool regular_at_zero() const { return den_.coeff(0) != 0; }
  // Requires regular_at_zero().
  Rational value_at_zero() const;

  RationalFunction derivative() const;
  RationalFunction compose_power(unsigned p) const;  // f(λ^p)
  // Taylor expansion at 0; throws DomainError on a pole at 0.
  TruncSeries to_series(std::size_t order) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ *= Rational(-1);
    return a;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::string to_string(const RationalFunction& f, std::string_view var = "λ");

}  // namespace dwork
