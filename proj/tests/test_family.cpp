#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dwork/errors.hpp"
#include "dwork/family.hpp"
#include "families.hpp"

using namespace dwork;

namespace {

const FamilyData& k3() {
  static const FamilyData f = validate_family(4, 4, {1, 1, 1, 1});
  return f;
}

CharVector cv(const FamilyData& f, std::vector<int> v) { return make_char_vector(f, v); }

}  // namespace

TEST_CASE("validate_family") {
  CHECK(k3().b == std::vector<long>{1, 0, 0, 0});
  CHECK(k3().dW == 4);
  const auto f = validate_family(3, 4, {1, 1, 2});
  CHECK(f.dW == 8);
  CHECK_THROWS_AS(validate_family(3, 4, {2, 2, 0}), ValidationError);
  CHECK_THROWS_WITH_AS(validate_family(3, 4, {1, 1, 1}), doctest::Contains("sum"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_family(3, 6, {2, 2, 2}), doctest::Contains("gcd"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_family(2, 2, {1, 1}), doctest::Contains("n >= 3"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_family(4, 3, {1, 1, 1, 0}), doctest::Contains("d >= n"), ValidationError);
}

TEST_CASE("b satisfies sum b_i w_i = 1 on random families") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 1000) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = std::uniform_int_distribution<int>(1, 40)(rng);
    int g = 0;
    for (int x : w) g = std::gcd(g, x);
    if (g != 1) continue;
    const int d = std::accumulate(w.begin(), w.end(), 0);
    const auto f = validate_family(n, d, w);
    long s = 0;
    for (int i = 0; i < n; ++i) s += f.b[i] * f.w[i];
    REQUIRE(s == 1);
    ++checked;
  }
}

TEST_CASE("character vectors") {
  const auto v = cv(k3(), {1, 2, 2, 3});
  CHECK(v.deg == 2);
  CHECK(v.N == 1);
  CHECK(is_totally_nonzero(v));
  CHECK_FALSE(is_totally_nonzero(cv(k3(), {0, 1, 3, 0})));
  CHECK(is_totally_nonzero(cv(k3(), {1, 1, 1, 1})));
  CHECK(cv(k3(), {-1, 5, 0, 0}).tilde == std::vector<int>{3, 1, 0, 0});
  CHECK_THROWS_AS(cv(k3(), {1, 1, 1, 0}), DomainError);
  CHECK_THROWS_AS(cv(k3(), {1, 1, 2}), DomainError);
}

TEST_CASE("rank and index sets on the quartic") {
  CHECK(rank(k3(), cv(k3(), {1, 1, 1, 1})) == 3);
  CHECK(rank(k3(), cv(k3(), {1, 1, 3, 3})) == 2);
  CHECK(rank(k3(), cv(k3(), {1, 2, 2, 3})) == 1);
  CHECK(index_set_J(k3(), cv(k3(), {1, 1, 3, 3})) == std::vector<int>{1, 3});
  CHECK(index_set_J(k3(), cv(k3(), {1, 2, 2, 3})) == std::vector<int>{1, 2, 3});
  CHECK(index_set_I(k3(), cv(k3(), {1, 1, 3, 3})) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(index_set_J(k3(), cv(k3(), {0, 1, 3, 0})), DomainError);
  CHECK_THROWS_AS(index_set_I(k3(), cv(k3(), {0, 1, 3, 0})), DomainError);
  CHECK(rank(k3(), cv(k3(), {0, 1, 3, 0})) == 1);

  const auto f = validate_family(3, 4, {1, 1, 2});
  CHECK(index_set_J(f, cv(f, {1, 1, 2})) == std::vector<int>{1, 3});
  CHECK(index_set_I(f, cv(f, {1, 1, 2})) == std::vector<int>{1, 3});
  CHECK(solution_exponents(k3(), cv(k3(), {1, 1, 3, 3})) == std::vector<int>{0, 2});
  CHECK(cyclic_basis_expected(k3(), cv(k3(), {1, 1, 1, 1})));
  CHECK_FALSE(cyclic_basis_expected(k3(), cv(k3(), {1, 1, 3, 3})));
}

TEST_CASE("exhaustive I = J and rank = d - #J for n in {3,4}, d <= 6") {
  std::size_t cases = 0;
  for (int n : {3, 4})
    for (int d = n; d <= 6; ++d)
      for (const auto& f : dwork::testing::all_families(n, d))
        for (const auto& v : dwork::testing::all_totally_nonzero(f)) {
          const auto j = index_set_J(f, v);
          REQUIRE(index_set_I(f, v) == j);
          REQUIRE(rank(f, v) == d - static_cast<int>(j.size()));
          // lift symmetry: deg V + deg(-V) = n
          std::vector<int> neg;
          for (int t : v.tilde) neg.push_back(d - t);
          REQUIRE(v.deg + cv(f, neg).deg == n);
          ++cases;
        }
  CHECK(cases > 1000);
}

TEST_CASE("frobenius_pullback") {
  CHECK(frobenius_pullback(k3(), cv(k3(), {1, 1, 1, 1}), 3).tilde == std::vector<int>{3, 3, 3, 3});
  CHECK(frobenius_pullback(k3(), cv(k3(), {1, 2, 2, 3}), 5).tilde == std::vector<int>{1, 2, 2, 3});
  CHECK(frobenius_pullback(k3(), cv(k3(), {1, 1, 3, 3}), 3).tilde == std::vector<int>{3, 3, 1, 1});
  CHECK_THROWS_AS(frobenius_pullback(k3(), cv(k3(), {1, 1, 1, 1}), 2), DomainError);
}

TEST_CASE("representatives") {
  const auto reps = representatives(k3());
  CHECK(reps.size() == 16);
  std::set<std::vector<int>> tildes;
  for (const auto& r : reps) tildes.insert(r.tilde);
  CHECK(tildes.count({1, 1, 1, 1}));
  CHECK(tildes.count({1, 1, 3, 3}));
  CHECK(tildes.count({1, 2, 2, 3}));
  CHECK(std::is_sorted(reps.begin(), reps.end()));

  // Each representative is least in its orbit, orbits are disjoint, and together they cover every class.
  const auto all = dwork::testing::all_totally_nonzero(k3());
  std::set<std::vector<int>> covered;
  for (const auto& r : reps)
    for (int s = 0; s < 4; ++s) {
      std::vector<int> m;
      for (int t : r.tilde) m.push_back((t + s) % 4);
      if (std::find(m.begin(), m.end(), 0) != m.end()) continue;
      CHECK(r.tilde <= m);
      CHECK(covered.insert(m).second);
    }
  CHECK(covered.size() == all.size());

  const auto classes = symmetry_classes(k3());
  REQUIRE(classes.size() == 3);
  std::map<std::vector<int>, std::size_t> counts;
  for (const auto& c : classes) counts[c.representative.tilde] = c.orbit_count;
  CHECK(counts.at({1, 1, 1, 1}) == 1);
  CHECK(counts.at({1, 1, 3, 3}) == 3);
  CHECK(counts.at({1, 2, 2, 3}) == 12);

  const auto cubic = representatives(validate_family(3, 3, {1, 1, 1}));
  REQUIRE(cubic.size() == 1);
  CHECK(cubic[0].tilde == std::vector<int>{1, 1, 1});
  CHECK(rank(validate_family(3, 3, {1, 1, 1}), cubic[0]) == 2);

  // (3,4,(1,1,2)): w_3 = 2 leaves no totally nonzero class with v_3 odd.
  const auto f = validate_family(3, 4, {1, 1, 2});
  for (const auto& r : representatives(f)) CHECK(is_totally_nonzero(r));
}

TEST_CASE("parse_int_list") {
  CHECK(parse_int_list("1,2,-3") == std::vector<int>{1, 2, -3});
  CHECK_THROWS_AS(parse_int_list("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_int_list("1,a"), UsageError);
  CHECK(to_string(cv(k3(), {1, 2, 2, 3})) == "1,2,2,3");
}
