#include "dwork/series.hpp"

#include <algorithm>
#include <string>

#include "dwork/errors.hpp"

namespace dwork {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* what) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(what) + ": mismatched truncation orders " +
                     std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
}

}  // namespace

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
  TruncSeries s(order);
  if (order > 0) s[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(std::size_t k, const Rational& c, std::size_t order) {
  TruncSeries s(order);
  if (k < order) s[k] = c;
  return s;
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> TruncSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return k;
  }
  return std::nullopt;
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw UsageError("cannot extend a series from order " + std::to_string(order()) + " to " +
                     std::to_string(new_order));
  }
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  require_same_order(*this, other, "series addition");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  require_same_order(*this, other, "series subtraction");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "series multiplication");
  const std::size_t n = a.order();
  TruncSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncSeries series_inverse(const TruncSeries& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (a[0] == 0) throw NonUnitError("series inverse: constant term is zero");
  TruncSeries out(n);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j] != 0) acc += a[j] * out[k - j];
    }
    out[k] = -acc * inv0;
  }
  return out;
}

TruncSeries series_derive(const TruncSeries& a) {
  if (a.order() == 0) return a;
  TruncSeries out(a.order() - 1);
  for (std::size_t k = 0; k + 1 < a.order(); ++k) out[k] = a[k + 1] * static_cast<unsigned long>(k + 1);
  return out;
}

TruncSeries shift_up(const TruncSeries& a, std::size_t k) {
  TruncSeries out(a.order());
  for (std::size_t i = 0; i + k < a.order(); ++i) out[i + k] = a[i];
  return out;
}

TruncSeries shift_down(const TruncSeries& a, std::size_t k) {
  if (k > a.order()) throw UsageError("shift_down beyond truncation order");
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != 0) throw DomainError("shift_down: series not divisible by λ^" + std::to_string(k));
  }
  return TruncSeries(std::vector<Rational>(a.coeffs().begin() + k, a.coeffs().end()));
}

TruncSeries substitute_power(const TruncSeries& a, unsigned p, std::size_t order) {
  if (p == 0) throw UsageError("substitute_power: p must be positive");
  const std::size_t needed = (order + p - 1) / p;
  if (a.order() < needed) {
    throw UsageError("substitute_power: need order " + std::to_string(needed) + " input, have " +
                     std::to_string(a.order()));
  }
  TruncSeries out(order);
  for (std::size_t k = 0; k * p < order; ++k) out[k * p] = a[k];
  return out;
}

}  // namespace dwork
