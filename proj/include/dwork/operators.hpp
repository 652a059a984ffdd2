#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dwork/family.hpp"
#include "dwork/matrix.hpp"
#include "dwork/poly.hpp"
#include "dwork/series.hpp"

namespace dwork {

enum class Variable { Lambda, T };

std::string variable_name(Variable v);  // "lambda" / "t"

/// Element of ℚ[x]⟨D⟩ with D = x d/dx, held in the normal form
/// Σ_j c_j(x) D^j (polynomial coefficients on the left). The rewrite
/// D x^m = x^m (D + m) makes this form unique.
class DiffOperator {
 public:
  explicit DiffOperator(Variable var = Variable::Lambda) : var_(var) {}
  DiffOperator(Variable var, std::vector<Poly> coeffs);

  // Σ_m x^m q_m(D).
  static DiffOperator from_graded(Variable var, const std::map<int, Poly>& graded);
  // left(D) - x^twist · right(D).
  static DiffOperator twisted(Variable var, const Poly& left, int twist, const Poly& right);

  Variable variable() const { return var_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }  // coeffs()[j] = c_j(x)
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::map<int, Poly> graded() const;

  DiffOperator& operator*=(const Rational& c);
  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) = default;

 private:
  void trim();
  Variable var_;
  std::vector<Poly> coeffs_;
};

/// An operator of shape Π_k (D - k) - x^twist Π_j (D + α_j), kept in
/// factored form so individual factors can be removed.
struct DworkFactors {
  int twist = 0;
  std::vector<Rational> left_roots;    // the k in (D - k)
  std::vector<Rational> right_params;  // the α in (D + α)

  Poly left() const;
  Poly right() const;
  DiffOperator expand(Variable var = Variable::Lambda) const;
  int order() const { return static_cast<int>(left_roots.size()); }
};

DworkFactors factors_P_prime(const FamilyData& family, const CharVector& v);
// P(V, W): for every k ∈ I(V, W), drop (D - k) on the left and one (D + d - k) on the right.
DworkFactors factors_P(const FamilyData& family, const CharVector& v);

DiffOperator build_P_prime(const FamilyData& family, const CharVector& v);
DiffOperator reduce_P(const FamilyData& family, const CharVector& v);

/// Parameters of Π(D_t + β_i - 1) - t Π(D_t + α_i).
struct HypParams {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  friend bool operator==(const HypParams&, const HypParams&) = default;
};

HypParams build_hyp_prime(const FamilyData& family, const CharVector& v);
// Removes α/β pairs congruent mod ℤ until none remain.
HypParams cancel(const HypParams& h);
DiffOperator expand(const HypParams& h);
bool is_irreducible(const HypParams& h);  // no α_i ≡ β_j mod ℤ

/// Companion matrix of the monic d/dλ form of an operator: unit
/// subdiagonal, last column -c_0, ..., -c_{r-1}.
struct CompanionMatrix {
  std::size_t r = 0;
  RatFunMatrix entries;
};

CompanionMatrix to_companion(const DiffOperator& op);

// Exact action of Σ c_j(λ) D^j on a truncated series; same order out.
TruncSeries apply_operator(const DiffOperator& op, const TruncSeries& s);

// x^N · op · x^-N, i.e. D ↦ D - N inside every coefficient polynomial in D.
DiffOperator conjugate(const DiffOperator& op, long N);
// D_λ ↦ -d D_t and λ^d ↦ t^-1, then multiplied on the left by the power of t
// that clears negative exponents, normalized so the t^0 part has leading
// coefficient 1 in D_t.
DiffOperator rescale_to_t(const DiffOperator& op, int d);
DiffOperator conjugate_and_rescale(const DiffOperator& op, long N, int d);

std::string to_text(const DiffOperator& op);
std::string to_text(const DworkFactors& f, Variable var = Variable::Lambda);
std::string to_text(const HypParams& h);

}  // namespace dwork
