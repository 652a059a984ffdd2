#pragma once

#include <map>
#include <string>
#include <vector>

#include "dwork/poly.hpp"

namespace dwork {

using Exponent = std::vector<int>;

// All exponent vectors of total degree `degree` in `nvars` variables,
// in graded-lexicographic order (X1 largest first).
std::vector<Exponent> monomials_of_degree(int nvars, int degree);

/// Homogeneous polynomial in X1..Xn with coefficients in ℚ(λ).
/// Terms are keyed by exponent vector; every key sums to degree() and no
/// stored coefficient is zero.
class HomogPoly {
 public:
  HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static HomogPoly monomial(const Exponent& e, const RationalFunction& c);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, RationalFunction>& terms() const { return terms_; }
  RationalFunction coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const RationalFunction& c);

  HomogPoly partial(int i) const;          // ∂/∂X_i, degree drops by one
  HomogPoly lambda_derivative() const;     // ∂/∂λ on coefficients
  HomogPoly scaled(const RationalFunction& c) const;

  HomogPoly& operator+=(const HomogPoly& o);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) = default;

 private:
  int nvars_;
  int degree_;
  std::map<Exponent, RationalFunction> terms_;
};

std::string to_string(const HomogPoly& p);

}  // namespace dwork
