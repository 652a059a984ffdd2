#include <random>

#include "doctest.h"
#include "dwork/errors.hpp"
#include "dwork/homog_poly.hpp"
#include "dwork/linsolve.hpp"
#include "dwork/matrix.hpp"
#include "dwork/padic.hpp"
#include "dwork/poly.hpp"
#include "dwork/series.hpp"
#include "test_util.hpp"

using namespace dwork;
using dwork::testing::random_rational;
using dwork::testing::random_series;

namespace {

TruncSeries ser(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return TruncSeries(v);
}

Poly lam() { return Poly::x(); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  CHECK(padic_valuation(make_rational(18, 5), 3) == 2);
  CHECK(padic_valuation(make_rational(2, 9), 3) == -2);
}

TEST_CASE("series_mul examples") {
  CHECK(series_mul(ser({1, 1, 0}), ser({1, -1, 0})) == ser({1, 0, -1}));
  CHECK(series_mul(ser({1, 1, 1, 1, 1}), ser({1, -1, 0, 0, 0})) == ser({1, 0, 0, 0, 0}));
  const TruncSeries s = ser({3, -2, 5, 7});
  CHECK(series_mul(s, TruncSeries::constant(1, 4)) == s);
  CHECK_THROWS_AS(series_mul(ser({1, 2}), ser({1, 2, 3})), UsageError);
}

TEST_CASE("series_inverse examples") {
  CHECK(series_inverse(ser({1, -1, 0, 0, 0})) == ser({1, 1, 1, 1, 1}));
  CHECK(series_inverse(ser({1, 0, 0})) == ser({1, 0, 0}));
  CHECK(series_inverse(ser({1, 2, 1, 0})) == ser({1, -2, 3, -4}));
  CHECK_THROWS_AS(series_inverse(ser({0, 1})), NonUnitError);
}

TEST_CASE("series_derive examples") {
  CHECK(series_derive(ser({0, 0, 1})) == ser({0, 2}));
  CHECK(series_derive(ser({5, 0, 0})).is_zero());
  TruncSeries e(10);
  Rational f = 1;
  for (std::size_t k = 0; k < 10; ++k) {
    e[k] = 1 / f;
    f *= static_cast<unsigned long>(k + 1);
  }
  CHECK(series_derive(e) == e.truncated(9));
}

TEST_CASE("series shifts and substitution") {
  const TruncSeries s = ser({1, 2, 3, 4});
  CHECK(shift_up(s, 2) == ser({0, 0, 1, 2}));
  CHECK(shift_down(ser({0, 0, 1, 2}), 2) == ser({1, 2}));
  CHECK_THROWS(shift_down(s, 1));
  CHECK(substitute_power(ser({1, 2, 3}), 3, 7) == ser({1, 0, 0, 2, 0, 0, 3}));
}

TEST_CASE("series ring properties on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 30);
    const auto b = random_series(rng, 30);
    const auto c = random_series(rng, 30);
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
    CHECK(series_derive(series_mul(a, b)) ==
          series_mul(series_derive(a), b.truncated(29)) + series_mul(a.truncated(29), series_derive(b)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng, 30, true);
    CHECK(series_mul(a, series_inverse(a)) == TruncSeries::constant(1, 30));
  }
}

TEST_CASE("polynomials and rational functions") {
  const Poly x = lam();
  const Poly p = x * x - Poly(1);
  CHECK(p.shifted(1) == x * x + x * Rational(2));
  CHECK(p.scaled_arg(2) == x * x * Rational(4) - Poly(1));
  auto [q, r] = divmod(p, x - Poly(1));
  CHECK(q == x + Poly(1));
  CHECK(r.is_zero());
  CHECK(gcd(p, x * x - x) == x - Poly(1));

  RationalFunction f(p, x - Poly(1));
  CHECK(f == RationalFunction(x + Poly(1)));
  CHECK(f.den() == Poly(1));
  RationalFunction g(Poly(1), Poly(1) - x);
  CHECK(g.den() == x - Poly(1));  // monic denominator
  CHECK(g.to_series(5) == TruncSeries(std::vector<Rational>{1, 1, 1, 1, 1}));
  CHECK((g * RationalFunction(Poly(1) - x)) == RationalFunction(1));
  CHECK(RationalFunction(x * x, x).derivative() == RationalFunction(1));
  CHECK_THROWS_AS(RationalFunction(Poly(1), x).to_series(3), DomainError);
}

TEST_CASE("linsolve_ratfun examples") {
  const Poly x = lam();
  RatFunMatrix id = RatFunMatrix::identity(2);
  auto s = linsolve_ratfun(id, {RationalFunction(1), RationalFunction(0)});
  REQUIRE(s);
  CHECK((*s)[0] == RationalFunction(1));
  CHECK((*s)[1].is_zero());

  RatFunMatrix m(2, 2);
  m(0, 0) = RationalFunction(x);
  m(0, 1) = RationalFunction(1);
  m(1, 1) = RationalFunction(x);
  s = linsolve_ratfun(m, {RationalFunction(1), RationalFunction(x)});
  REQUIRE(s);
  CHECK((*s)[0].is_zero());
  CHECK((*s)[1] == RationalFunction(1));

  RatFunMatrix z(1, 1);
  CHECK_FALSE(linsolve_ratfun(z, {RationalFunction(1)}));
}

TEST_CASE("linsolve_ratfun solutions substitute back") {
  std::mt19937_64 rng(11);
  const Poly x = lam();
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t rows = 3 + trial % 3;
    const std::size_t cols = 2 + trial % 4;
    RatFunMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if ((i + j + trial) % 3 == 0) continue;
        Poly num = Poly(random_rational(rng)) + x * random_rational(rng);
        Poly den = Poly(1) + x * x * random_rational(rng);
        m(i, j) = RationalFunction(num, den);
      }
    // right-hand side in the column space
    std::vector<RationalFunction> x0(cols);
    for (auto& e : x0) e = RationalFunction(Poly(random_rational(rng)) + x * random_rational(rng));
    std::vector<RationalFunction> rhs(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) rhs[i] += m(i, j) * x0[j];
    auto sol = linsolve_ratfun(m, rhs);
    REQUIRE(sol);
    for (std::size_t i = 0; i < rows; ++i) {
      RationalFunction acc;
      for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * (*sol)[j];
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("matrix inverse over Q(lambda)") {
  const Poly x = lam();
  RatFunMatrix m(2, 2);
  m(0, 0) = RationalFunction(1);
  m(0, 1) = RationalFunction(x);
  m(1, 0) = RationalFunction(x);
  m(1, 1) = RationalFunction(1);
  CHECK(m * inverse(m) == RatFunMatrix::identity(2));
  RatFunMatrix s(2, 2);
  s(0, 0) = RationalFunction(x);
  s(1, 0) = RationalFunction(x);
  CHECK(is_singular(s));
  CHECK_THROWS_AS(inverse(s), DomainError);
}

TEST_CASE("homogeneous polynomials") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Exponent{2, 0, 0});
  CHECK(monomials_of_degree(3, 2).back() == Exponent{0, 0, 2});
  HomogPoly p(2, 3);
  p.add_term({2, 1}, RationalFunction(3));
  p.add_term({0, 3}, RationalFunction(lam()));
  HomogPoly dp = p.partial(1);
  CHECK(dp.coeff({2, 0}) == RationalFunction(3));
  CHECK(dp.coeff({0, 2}) == RationalFunction(lam() * Rational(3)));
  CHECK(p.lambda_derivative().terms().size() == 1);
  p.add_term({2, 1}, RationalFunction(-3));
  CHECK(p.terms().size() == 1);
  CHECK_THROWS(p.add_term({1, 1}, RationalFunction(1)));
}

TEST_CASE("reduce_mod_p examples") {
  std::vector<Rational> c{make_rational(1, 2)};
  auto r = reduce_mod_p(std::span<const Rational>(c), 3, 2);
  CHECK(r.valuation == 0);
  CHECK(r.entries[0] == 5);
  c = {Rational(0)};
  CHECK(reduce_mod_p(std::span<const Rational>(c), 3, 2).entries[0] == 0);
  c = {make_rational(1, 3)};
  r = reduce_mod_p(std::span<const Rational>(c), 3, 2);
  CHECK(r.valuation == -1);
  CHECK(r.entries[0] == 1);
  c = {make_rational(1, 3), make_rational(1, 2)};
  r = reduce_mod_p(std::span<const Rational>(c), 3, 2);
  CHECK(r.valuation == -1);
  CHECK(r.entries[1] == 6);  // 3 · 1/2 = 3 · 5 mod 9
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}
