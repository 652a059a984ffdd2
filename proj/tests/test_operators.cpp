#include <algorithm>

#include "doctest.h"
#include "dwork/errors.hpp"
#include "dwork/operators.hpp"
#include "families.hpp"

using namespace dwork;

namespace {

const FamilyData& k3() {
  static const FamilyData f = validate_family(4, 4, {1, 1, 1, 1});
  return f;
}

CharVector cv(const FamilyData& f, std::vector<int> v) { return make_char_vector(f, v); }

Poly D() { return Poly::x(); }

// (D + a) as a polynomial in D.
Poly lin(long a) { return D() + Poly(Rational(a)); }

std::vector<Rational> rats(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [p, q] : xs) out.push_back(make_rational(p, q));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("operator product follows D x^m = x^m (D + m)") {
  DiffOperator d(Variable::Lambda, {Poly(0), Poly(1)});        // D
  DiffOperator x(Variable::Lambda, {Poly::monomial(1, 1)});    // λ
  DiffOperator xd(Variable::Lambda, {Poly(0), Poly::monomial(1, 1)});  // λ D
  CHECK(d * x == xd + x);
  CHECK(to_text(d) == "(1)*D");
}

TEST_CASE("build_P_prime examples") {
  const auto left = D() * lin(-1) * lin(-2) * lin(-3);
  CHECK(build_P_prime(k3(), cv(k3(), {1, 2, 2, 3})) ==
        DiffOperator::twisted(Variable::Lambda, left, 4, lin(1) * lin(2) * lin(2) * lin(3)));
  CHECK(build_P_prime(k3(), cv(k3(), {1, 1, 1, 1})) ==
        DiffOperator::twisted(Variable::Lambda, left, 4, lin(1) * lin(1) * lin(1) * lin(1)));
  const auto f = validate_family(3, 4, {1, 1, 2});
  CHECK(build_P_prime(f, cv(f, {1, 1, 2})) ==
        DiffOperator::twisted(Variable::Lambda, left, 4, lin(1) * lin(1) * lin(1) * lin(3)));
  CHECK_THROWS_AS(build_P_prime(k3(), cv(k3(), {0, 1, 3, 0})), DomainError);
}

TEST_CASE("reduce_P on the quartic") {
  CHECK(reduce_P(k3(), cv(k3(), {1, 2, 2, 3})) == DiffOperator::twisted(Variable::Lambda, D(), 4, lin(2)));
  CHECK(reduce_P(k3(), cv(k3(), {1, 1, 1, 1})) ==
        DiffOperator::twisted(Variable::Lambda, D() * lin(-1) * lin(-2), 4, lin(1) * lin(1) * lin(1)));
  CHECK(reduce_P(k3(), cv(k3(), {1, 1, 3, 3})) ==
        DiffOperator::twisted(Variable::Lambda, D() * lin(-2), 4, lin(1) * lin(3)));
  CHECK(to_text(factors_P(k3(), cv(k3(), {1, 1, 3, 3}))) == "D(D - 2) - λ^4(D + 1)(D + 3)");
  CHECK(to_text(factors_P(k3(), cv(k3(), {1, 1, 1, 1}))) == "D(D - 1)(D - 2) - λ^4(D + 1)^3");
}

TEST_CASE("normal form does not depend on factor order") {
  const auto a = DiffOperator::twisted(Variable::Lambda, lin(-2) * D(), 4, lin(3) * lin(1));
  const auto b = DiffOperator::twisted(Variable::Lambda, D() * lin(-2), 4, lin(1) * lin(3));
  CHECK(a == b);
  // as operator products of commuting first-order factors
  DiffOperator f1(Variable::Lambda, {Poly(1), Poly(1)});
  DiffOperator f3(Variable::Lambda, {Poly(3), Poly(1)});
  CHECK(f1 * f3 == f3 * f1);
}

TEST_CASE("order(reduce_P) = rank, exhaustive for n in {3,4}, d <= 6") {
  for (int n : {3, 4})
    for (int d = n; d <= 6; ++d)
      for (const auto& f : dwork::testing::all_families(n, d))
        for (const auto& v : dwork::testing::all_totally_nonzero(f)) {
          REQUIRE(reduce_P(f, v).order() == rank(f, v));
          REQUIRE(factors_P(f, v).order() == rank(f, v));
        }
}

TEST_CASE("hypergeometric parameters") {
  const auto h = build_hyp_prime(k3(), cv(k3(), {1, 1, 1, 1}));
  CHECK(h.alphas == rats({{1, 4}, {1, 2}, {3, 4}, {1, 1}}));
  CHECK(h.betas == rats({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  const auto c = cancel(h);
  CHECK(c.alphas == rats({{1, 4}, {1, 2}, {3, 4}}));
  CHECK(c.betas == rats({{1, 1}, {1, 1}, {1, 1}}));
  CHECK(is_irreducible(c));
  CHECK(to_text(c) == "Hyp(1/4, 1/2, 3/4; 1, 1, 1; t)");

  HypParams t{{make_rational(1, 2), Rational(1)}, {Rational(1), make_rational(1, 3)}};
  const auto tc = cancel(t);
  CHECK(tc.alphas == rats({{1, 2}}));
  CHECK(tc.betas == rats({{1, 3}}));
  CHECK(cancel(tc) == tc);
}

TEST_CASE("cancel size equals rank and output is irreducible, exhaustive") {
  for (int n : {3, 4})
    for (int d = n; d <= 6; ++d)
      for (const auto& f : dwork::testing::all_families(n, d))
        for (const auto& v : dwork::testing::all_totally_nonzero(f)) {
          const auto h = build_hyp_prime(f, v);
          REQUIRE(h.alphas.size() == static_cast<std::size_t>(d));
          REQUIRE(h.betas.size() == static_cast<std::size_t>(d));
          const auto c = cancel(h);
          REQUIRE(c.alphas.size() == static_cast<std::size_t>(rank(f, v)));
          REQUIRE(is_irreducible(c));
          // every removed pair was an exact equality
          std::vector<Rational> common;
          std::set_intersection(h.alphas.begin(), h.alphas.end(), h.betas.begin(), h.betas.end(),
                                std::back_inserter(common));
          REQUIRE(common.size() + c.alphas.size() == static_cast<std::size_t>(d));
        }
}

TEST_CASE("conjugate and rescale turns P' into Hyp'") {
  for (int n : {3, 4})
    for (int d = n; d <= 6; ++d)
      for (const auto& f : dwork::testing::all_families(n, d))
        for (const auto& v : dwork::testing::all_totally_nonzero(f)) {
          REQUIRE(conjugate_and_rescale(build_P_prime(f, v), v.N, f.d) == expand(build_hyp_prime(f, v)));
        }
  // N = 0, d = 1: D_λ ↦ -D_t, normalized
  DiffOperator op(Variable::Lambda, {Poly(3), Poly(1)});
  CHECK(rescale_to_t(op, 1) == DiffOperator(Variable::T, {Poly(-3), Poly(1)}));
  const auto p = build_P_prime(k3(), cv(k3(), {1, 2, 2, 3}));
  CHECK(conjugate(conjugate(p, 5), -5) == p);
}

TEST_CASE("to_companion") {
  const auto c1 = to_companion(reduce_P(k3(), cv(k3(), {1, 2, 2, 3})));
  REQUIRE(c1.r == 1);
  const Poly x = Poly::x();
  CHECK(c1.entries(0, 0) == RationalFunction(x * x * x * Rational(2), Poly(1) - x * x * x * x));

  const auto c3 = to_companion(reduce_P(k3(), cv(k3(), {1, 1, 3, 3})));
  REQUIRE(c3.r == 2);
  CHECK(c3.entries(1, 0) == RationalFunction(1));
  CHECK(c3.entries(0, 0).is_zero());
  // λ²(1-λ⁴) w'' - (λ + 5λ⁵) w' - 3λ⁴ w = 0
  const Poly lead = x * x - Poly::monomial(6, 1);
  CHECK(c3.entries(0, 1) == RationalFunction(Poly::monomial(4, 3), lead));
  CHECK(c3.entries(1, 1) == RationalFunction(x + Poly::monomial(5, 5), lead));

  const auto c2 = to_companion(reduce_P(k3(), cv(k3(), {1, 1, 1, 1})));
  CHECK(c2.r == 3);
  CHECK(c2.entries(1, 0) == RationalFunction(1));
  CHECK(c2.entries(2, 1) == RationalFunction(1));
  CHECK(c2.entries(0, 1).is_zero());
  CHECK_THROWS_AS(to_companion(DiffOperator()), DomainError);
}

TEST_CASE("apply_operator") {
  DiffOperator dm2(Variable::Lambda, {Poly(-2), Poly(1)});
  CHECK(apply_operator(dm2, TruncSeries::monomial(2, 1, 6)).is_zero());
  DiffOperator d(Variable::Lambda, {Poly(0), Poly(1)});
  CHECK(apply_operator(d, TruncSeries::constant(5, 6)).is_zero());
  // (1-λ⁴)^(-1/2) is killed by D - λ⁴(D + 2)
  TruncSeries s(40);
  s[0] = 1;
  for (std::size_t m = 1; 4 * m < 40; ++m) s[4 * m] = s[4 * (m - 1)] * make_rational(2 * static_cast<long>(m) - 1, 2 * static_cast<long>(m));
  CHECK(apply_operator(reduce_P(k3(), cv(k3(), {1, 2, 2, 3})), s).is_zero());
}
