#include "dwork/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dwork/errors.hpp"

namespace dwork {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

struct Bezout {
  long g, s, t;
};

Bezout ext_gcd(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Among all (s, t) with s·a + t·b = gcd(a, b), pick least |s| + |t|,
// preferring the larger s on ties.
Bezout minimal_bezout(long a, long b) {
  Bezout base = ext_gcd(a, b);
  const long step_s = b / base.g;
  const long step_t = a / base.g;
  std::vector<long> candidates;
  for (long k0 : {step_s != 0 ? -base.s / step_s : 0L, step_t != 0 ? base.t / step_t : 0L}) {
    for (long k = k0 - 2; k <= k0 + 2; ++k) candidates.push_back(k);
  }
  Bezout best = base;
  long best_cost = std::labs(base.s) + std::labs(base.t);
  for (long k : candidates) {
    Bezout c{base.g, base.s + k * step_s, base.t - k * step_t};
    long cost = std::labs(c.s) + std::labs(c.t);
    if (cost < best_cost || (cost == best_cost && c.s > best.s)) {
      best = c;
      best_cost = cost;
    }
  }
  return best;
}

void require_totally_nonzero(const CharVector& v, const char* what) {
  if (!is_totally_nonzero(v)) {
    throw DomainError(std::string(what) + ": character vector " + to_string(v) + " is not totally nonzero");
  }
}

CharVector shifted(const FamilyData& f, const CharVector& v, int r) {
  std::vector<int> res(v.tilde.size());
  for (std::size_t i = 0; i < res.size(); ++i) res[i] = static_cast<int>(mod(v.tilde[i] + r * f.w[i], f.d));
  return make_char_vector(f, res);
}

}  // namespace

FamilyData validate_family(int n, int d, const std::vector<int>& w) {
  if (n < 3) throw ValidationError("invalid family: n >= 3 required (got n = " + std::to_string(n) + ")");
  if (d < n) throw ValidationError("invalid family: d >= n required (got d = " + std::to_string(d) + ")");
  if (static_cast<int>(w.size()) != n) {
    throw ValidationError("invalid family: W must have n = " + std::to_string(n) + " entries");
  }
  for (int x : w) {
    if (x <= 0) throw ValidationError("invalid family: every w_i must be a positive integer");
  }
  if (std::accumulate(w.begin(), w.end(), 0L) != d) throw ValidationError("invalid family: sum of w_i must equal d");
  long g = 0;
  for (int x : w) g = std::gcd(g, static_cast<long>(x));
  if (g != 1) throw ValidationError("invalid family: gcd(w_1, ..., w_n) must be 1");

  FamilyData f;
  f.n = n;
  f.d = d;
  f.w = w;
  long l = 1;
  for (int x : w) l = std::lcm(l, static_cast<long>(x));
  f.dW = l * d;

  f.b.assign(static_cast<std::size_t>(n), 0);
  f.b[0] = 1;
  long acc = w[0];
  for (int i = 1; i < n; ++i) {
    Bezout bz = minimal_bezout(acc, w[i]);
    for (int j = 0; j < i; ++j) f.b[j] *= bz.s;
    f.b[i] = bz.t;
    acc = bz.g;
  }
  return f;
}

CharVector make_char_vector(const FamilyData& family, const std::vector<int>& residues) {
  if (static_cast<int>(residues.size()) != family.n) {
    throw DomainError("character vector must have " + std::to_string(family.n) + " entries");
  }
  CharVector v;
  v.d = family.d;
  long sum = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    int t = static_cast<int>(mod(residues[i], family.d));
    v.tilde.push_back(t);
    sum += t;
    v.N += family.b[i] * t;
  }
  if (sum % family.d != 0) throw DomainError("character vector " + to_string(v) + " does not sum to 0 mod d");
  v.deg = sum / family.d;
  return v;
}

bool is_totally_nonzero(const CharVector& v) {
  return std::all_of(v.tilde.begin(), v.tilde.end(), [](int t) { return t != 0; });
}

int rank(const FamilyData& family, const CharVector& v) {
  int count = 0;
  for (int r = 0; r < family.d; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < v.tilde.size() && ok; ++i) ok = mod(v.tilde[i] + r * family.w[i], family.d) != 0;
    if (ok) ++count;
  }
  return count;
}

std::vector<int> index_set_J(const FamilyData& family, const CharVector& v) {
  require_totally_nonzero(v, "index_set_J");
  std::vector<int> out;
  for (int r = 0; r < family.d; ++r) {
    for (std::size_t i = 0; i < v.tilde.size(); ++i) {
      if (mod(v.tilde[i] + r * family.w[i], family.d) == 0) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

std::vector<int> index_set_I(const FamilyData& family, const CharVector& v) {
  require_totally_nonzero(v, "index_set_I");
  std::set<int> out;
  for (std::size_t i = 0; i < v.tilde.size(); ++i) {
    const int wi = family.w[i];
    for (int j = 0; j < wi; ++j) {
      const int num = v.tilde[i] + j * family.d;
      if (num % wi == 0) out.insert(family.d - num / wi);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> solution_exponents(const FamilyData& family, const CharVector& v) {
  std::vector<int> removed = index_set_I(family, v);
  std::vector<int> out;
  for (int k = 0; k < family.d; ++k) {
    if (!std::binary_search(removed.begin(), removed.end(), k)) out.push_back(k);
  }
  return out;
}

bool cyclic_basis_expected(const FamilyData& family, const CharVector& v) {
  std::vector<int> ks = solution_exponents(family, v);
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] != static_cast<int>(i)) return false;
  return true;
}

CharVector frobenius_pullback(const FamilyData& family, const CharVector& v, long p) {
  Bezout bz = ext_gcd(mod(p, family.d), family.d);
  if (bz.g != 1) {
    throw DomainError("frobenius_pullback: p = " + std::to_string(p) + " is not prime to d = " +
                      std::to_string(family.d));
  }
  const long inv = mod(bz.s, family.d);
  std::vector<int> res;
  for (int t : v.tilde) res.push_back(static_cast<int>(mod(inv * t, family.d)));
  return make_char_vector(family, res);
}

std::vector<CharVector> representatives(const FamilyData& family) {
  std::set<std::vector<int>> seen;
  std::vector<CharVector> out;
  const int n = family.n;
  const int d = family.d;
  std::vector<int> cur(static_cast<std::size_t>(n), 1);
  // Enumerate totally nonzero vectors with entries 1..d-1 in lexicographic order;
  // the first member met from each orbit is its least totally nonzero member.
  while (true) {
    long sum = std::accumulate(cur.begin(), cur.end(), 0L);
    if (sum % d == 0 && !seen.count(cur)) {
      CharVector v = make_char_vector(family, cur);
      for (int r = 0; r < d; ++r) seen.insert(shifted(family, v, r).tilde);
      out.push_back(v);
    }
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == d - 1) cur[pos--] = 1;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

std::vector<SymmetryClass> symmetry_classes(const FamilyData& family) {
  std::vector<int> perm(static_cast<std::size_t>(family.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> stabilizer;
  do {
    bool fixes = true;
    for (int i = 0; i < family.n && fixes; ++i) fixes = family.w[perm[i]] == family.w[i];
    if (fixes) stabilizer.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, SymmetryClass> groups;
  for (const auto& rep : representatives(family)) {
    std::vector<int> best = rep.tilde;
    for (const auto& s : stabilizer) {
      std::vector<int> permuted(rep.tilde.size());
      for (std::size_t i = 0; i < permuted.size(); ++i) permuted[i] = rep.tilde[s[i]];
      CharVector pv = make_char_vector(family, permuted);
      for (int r = 0; r < family.d; ++r) {
        CharVector m = shifted(family, pv, r);
        if (is_totally_nonzero(m) && m.tilde < best) best = m.tilde;
      }
    }
    auto [it, inserted] = groups.try_emplace(best, SymmetryClass{make_char_vector(family, best), 0});
    ++it->second.orbit_count;
  }
  std::vector<SymmetryClass> out;
  for (auto& [k, g] : groups) out.push_back(g);
  return out;
}

std::string to_string(const CharVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.tilde.size(); ++i) os << (i ? "," : "") << v.tilde[i];
  return os.str();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in integer list '" + s + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed integer '" + item + "'");
    }
    if (used != item.size()) throw UsageError("malformed integer '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

}  // namespace dwork
