#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dwork {

/// Validated data (n, d, W) of the pencil
///   w1 X1^d + ... + wn Xn^d - d λ X1^w1 ... Xn^wn = 0,
/// together with a fixed integer vector b with Σ b_i w_i = 1.
struct FamilyData {
  int n = 0;
  int d = 0;
  std::vector<int> w;
  std::vector<long> b;
  long dW = 0;  // lcm(w) · d

  friend bool operator==(const FamilyData&, const FamilyData&) = default;
};

// Throws ValidationError naming the first violated condition.
// b is built by folding extended Euclid left to right over W, each step
// taking the Bézout pair of least |s| + |t| (ties: larger coefficient on the
// accumulated side), so that W = (1, ..., 1) yields b = (1, 0, ..., 0).
FamilyData validate_family(int n, int d, const std::vector<int>& w);

/// A class V in (ℤ/d)^n with coordinate sum 0, stored through its lifts
/// ṽ_i ∈ {0, ..., d-1}.
struct CharVector {
  int d = 0;
  std::vector<int> tilde;
  long deg = 0;  // Σ ṽ_i / d
  long N = 0;    // Σ b_i ṽ_i for the family this vector was built against

  friend bool operator==(const CharVector&, const CharVector&) = default;
  friend auto operator<=>(const CharVector& a, const CharVector& b) { return a.tilde <=> b.tilde; }
};

// Residues may be any integers; they are reduced mod d. Throws DomainError
// if the coordinate sum is not 0 mod d or the length is not n.
CharVector make_char_vector(const FamilyData& family, const std::vector<int>& residues);

bool is_totally_nonzero(const CharVector& v);

// #{r ∈ ℤ/d : V + rW totally nonzero}.
int rank(const FamilyData& family, const CharVector& v);

// {r : ṽ_i + r w_i ≡ 0 mod d for some i}; requires V totally nonzero.
std::vector<int> index_set_J(const FamilyData& family, const CharVector& v);

// Integers among d - (ṽ_i + j d)/w_i, 0 ≤ j < w_i; requires V totally nonzero.
std::vector<int> index_set_I(const FamilyData& family, const CharVector& v);

// {0, ..., d-1} minus I(V, W): the local exponents at λ = 0 of the reduced operator.
std::vector<int> solution_exponents(const FamilyData& family, const CharVector& v);

// Whether ω_V, dω_V/dλ, ... should form a basis near λ = 0, i.e. the
// exponents are exactly {0, ..., rank - 1}.
bool cyclic_basis_expected(const FamilyData& family, const CharVector& v);

// V ↦ p^-1 V componentwise mod d. Throws DomainError if gcd(p, d) ≠ 1.
CharVector frobenius_pullback(const FamilyData& family, const CharVector& v, long p);

// Lexicographically least totally nonzero member of each V + ⟨W⟩ orbit
// that contains a totally nonzero class, sorted.
std::vector<CharVector> representatives(const FamilyData& family);

/// Orbits grouped further under coordinate permutations that fix W. The
/// operator of a class only depends on the multiset {(ṽ_i, w_i)}, so each
/// group shares one Picard-Fuchs operator.
struct SymmetryClass {
  CharVector representative;  // lexicographically least over the group
  std::size_t orbit_count = 0;
};
std::vector<SymmetryClass> symmetry_classes(const FamilyData& family);

std::string to_string(const CharVector& v);  // "1,2,2,3"
std::vector<int> parse_int_list(std::string_view text);

}  // namespace dwork
