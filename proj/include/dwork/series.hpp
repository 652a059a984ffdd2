#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dwork/rational.hpp"

namespace dwork {

/// Dense power series in λ truncated at a fixed order: coefficients of
/// λ^0, ..., λ^(order-1) are kept and nothing beyond is ever read or
/// written. Binary operations require equal orders; there is no silent
/// truncation to the smaller operand.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order = 0) : coeffs_(order) {}
  explicit TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static TruncSeries constant(const Rational& c, std::size_t order);
  static TruncSeries monomial(std::size_t k, const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }

  bool is_zero() const;
  // Index of the first nonzero coefficient, or nullopt for zero.
  std::optional<std::size_t> valuation() const;
  // Drops coefficients >= new_order; new_order must not exceed order().
  TruncSeries truncated(std::size_t new_order) const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// Throws NonUnitError when the constant term vanishes.
TruncSeries series_inverse(const TruncSeries& a);

// d/dλ; the result has order a.order() - 1 (0 stays 0).
TruncSeries series_derive(const TruncSeries& a);

// λ^k · a, same order.
TruncSeries shift_up(const TruncSeries& a, std::size_t k);

// a / λ^k. Requires the first k coefficients to vanish; order drops by k.
TruncSeries shift_down(const TruncSeries& a, std::size_t k);

// a(λ^p) truncated to `order`; needs a.order() >= ceil(order / p).
TruncSeries substitute_power(const TruncSeries& a, unsigned p, std::size_t order);

}  // namespace dwork
