#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dwork/family.hpp"
#include "dwork/homog_poly.hpp"
#include "dwork/operators.hpp"

namespace dwork {

/// Σ_p A_p / Q_λ^p · Ω in H^{n-1}(ℙ^{n-1} \ X_λ) over ℚ(λ), with
/// deg A_p = p·d - n. Zero numerators are never stored.
struct CohomClass {
  int n = 0;
  int d = 0;
  std::map<int, HomogPoly> terms;

  bool empty() const { return terms.empty(); }
  int top_pole_order() const { return terms.empty() ? 0 : terms.rbegin()->first; }
  void add(int pole, const HomogPoly& numerator);
};

CohomClass operator+(CohomClass a, const CohomClass& b);
CohomClass scaled(const CohomClass& c, const RationalFunction& f);

// X^(ṽ-1) / Q^deg V.
CohomClass omega_class(const FamilyData& family, const CharVector& v);

// D_λ = λ d/dλ: A/Q^p ↦ λ ∂A/∂λ / Q^p + p d λ X^W A / Q^(p+1).
CohomClass apply_D_lambda(const FamilyData& family, const CohomClass& c);

/// Per-degree linear algebra of the Jacobian ideal of Q_λ, split into
/// blocks of monomials sharing a character class (the Griffiths relations
/// never mix blocks). Blocks are built on first use and then read-only;
/// a single cache may be shared by several threads.
class JacobianBasisCache {
 public:
  static constexpr std::size_t kDefaultMaxBlockRows = 1500;

  explicit JacobianBasisCache(FamilyData family, std::size_t max_block_rows = kDefaultMaxBlockRows);
  ~JacobianBasisCache();
  JacobianBasisCache(const JacobianBasisCache&) = delete;
  JacobianBasisCache& operator=(const JacobianBasisCache&) = delete;

  const FamilyData& family() const { return family_; }

  // One Griffiths step at the top pole order p ≥ 2: write A_p = Σ B_i ∂Q/∂X_i
  // and move (1/(p-1)) Σ ∂B_i/∂X_i down to order p-1. nullopt if A_p ∉ J.
  std::optional<CohomClass> griffiths_reduce_step(const CohomClass& c, int p) const;

  // Representative whose numerators lie in a fixed complement of the
  // Jacobian ideal in every degree; zero exactly when the class is.
  CohomClass normal_form(const CohomClass& c) const;

  bool is_zero_class(const CohomClass& c) const;

 private:
  struct Block;
  struct Degree;
  const Block& block(int degree, const std::vector<int>& key) const;
  std::vector<int> key_of(const Exponent& e) const;

  FamilyData family_;
  std::size_t max_block_rows_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Degree>> degrees_;
};

struct VerifyReport {
  bool annihilates = false;
  int top_pole_order = 0;  // highest pole order met while applying the operator
};

VerifyReport verify_annihilation_report(const JacobianBasisCache& cache, const CharVector& v, const DiffOperator& op);
bool verify_annihilation(const FamilyData& family, const CharVector& v, const DiffOperator& op);

}  // namespace dwork
