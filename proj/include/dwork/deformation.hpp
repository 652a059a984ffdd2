#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dwork/family.hpp"
#include "dwork/matrix.hpp"
#include "dwork/operators.hpp"
#include "dwork/padic.hpp"
#include "dwork/series.hpp"

namespace dwork {

/// rows × cols matrix of truncated series sharing one order.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(std::size_t rows, std::size_t cols, std::size_t order);

  static SeriesMatrix identity(std::size_t n, std::size_t order);
  static SeriesMatrix constant(const RationalMatrix& m, std::size_t order);
  // Entries must be regular at λ = 0.
  static SeriesMatrix from_rational(const RatFunMatrix& m, std::size_t order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t order() const { return order_; }
  TruncSeries& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const TruncSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RationalMatrix coefficient(std::size_t k) const;  // matrix of λ^k coefficients
  RationalMatrix value_at_zero() const { return coefficient(0); }
  bool is_zero() const;
  SeriesMatrix truncated(std::size_t order) const;

  SeriesMatrix& operator+=(const SeriesMatrix& o);
  SeriesMatrix& operator-=(const SeriesMatrix& o);
  SeriesMatrix& operator*=(const Rational& c);
  friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
  friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const RationalMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const RationalMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t order_ = 0;
  std::vector<TruncSeries> entries_;
};

SeriesMatrix derive(const SeriesMatrix& m);  // order drops by one
// Throws NonUnitError when the constant term is singular.
SeriesMatrix inverse(const SeriesMatrix& m);
SeriesMatrix substitute_power(const SeriesMatrix& m, unsigned p, std::size_t order);
SeriesMatrix shift_up(const SeriesMatrix& m, std::size_t k);  // λ^k · m
// Solves X' = X·C with X(0) = x0 to the order of C plus one.
SeriesMatrix solve_right_ode(const RationalMatrix& x0, const SeriesMatrix& c);

struct SolutionBasis {
  std::vector<int> exponents;       // k_i
  std::vector<Rational> leading;    // coefficient of λ^k_i in w_i
  std::vector<TruncSeries> solutions;
};

// w_i = leading_i · λ^k_i · rF(r-1)((α_j + k_i)/d ; 1 + (k_i - k_j)/d, j ≠ i ; λ^d).
// leading_i is 1/k_i! when the exponents are {0, ..., r-1} (so the Wronskian
// starts at I) and 1 otherwise. Throws UnsupportedCase on a lower parameter
// that is a nonpositive integer.
SolutionBasis fundamental_solutions(const FamilyData& family, const CharVector& v, std::size_t order);

// Row i = (w_i, w_i', ..., w_i^(r-1)); order drops by r - 1.
SeriesMatrix wronskian(const SolutionBasis& basis);

class CyclicBasisFails : public DomainError {
 public:
  CyclicBasisFails(const std::string& what, SeriesMatrix w) : DomainError(what), wronskian_(std::move(w)) {}
  const SeriesMatrix& wronskian() const { return wronskian_; }

 private:
  SeriesMatrix wronskian_;
};

// A = W(0)^-1 W to the given order. Throws CyclicBasisFails when W(0) is singular.
SeriesMatrix deformation_matrix(const FamilyData& family, const CharVector& v, std::size_t order);

/// Columns of W·B span the canonical lattice; B has Laurent polynomial entries.
struct BasisChange {
  RatFunMatrix b;
};

struct CorrectedBasis {
  BasisChange change;
  SeriesMatrix a;           // M(0)^-1 · W · B, with A(0) = I
  RatFunMatrix connection;  // B^-1 C B + B^-1 B'
};

// Greedy column normalization of W; the result has order w.order() minus the
// largest power of λ divided out. Throws UnsupportedCase if no invertible
// A(0) is reached or the new connection is not regular at 0 with nilpotent
// constant term.
CorrectedBasis canonical_correction(const SeriesMatrix& w, const RatFunMatrix& companion);

// B^-1 C B + B^-1 dB/dλ.
RatFunMatrix gauge_transform(const RatFunMatrix& c, const RatFunMatrix& b);
bool is_nilpotent(const RationalMatrix& m);

struct Deformation {
  SolutionBasis basis;
  SeriesMatrix wronskian;
  SeriesMatrix a;
  RatFunMatrix connection;  // dA/dλ = A · connection
  std::optional<BasisChange> change;
};

// Cyclic path when W(0) is invertible, canonical correction otherwise.
Deformation compute_deformation(const FamilyData& family, const CharVector& v, std::size_t order);

struct FrobeniusResult {
  long p = 0;
  RationalMatrix f0;
  SeriesMatrix f;
};

// F = A_V^-1 · F0 · A_V1(λ^p). a_v needs `order`, a_v1 needs ceil(order / p).
FrobeniusResult frobenius_matrix(const FamilyData& family, const SeriesMatrix& a_v, const SeriesMatrix& a_v1,
                                 const RationalMatrix& f0, long p, std::size_t order);

// F' + C_V F - p λ^(p-1) F C_V1(λ^p), to F.order() - 1.
SeriesMatrix horizontality_residual(const SeriesMatrix& f, const RatFunMatrix& c_v, const RatFunMatrix& c_v1, long p);

std::vector<PadicMatrix> reduce_mod_p(const SeriesMatrix& m, const Integer& p, unsigned precision);

}  // namespace dwork
