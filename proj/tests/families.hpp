#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "dwork/family.hpp"

namespace dwork::testing {

// Every ordered W with positive entries, Σw = d and gcd 1.
inline std::vector<FamilyData> all_families(int n, int d) {
  std::vector<FamilyData> out;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      if (left < 1) return;
      w[i] = left;
      int g = 0;
      for (int x : w) g = std::gcd(g, x);
      if (g == 1) out.push_back(validate_family(n, d, w));
      return;
    }
    for (int x = 1; x <= left - (n - 1 - i); ++x) {
      w[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

// Every totally nonzero V in (ℤ/d)^n with coordinate sum 0.
inline std::vector<CharVector> all_totally_nonzero(const FamilyData& f) {
  std::vector<CharVector> out;
  std::vector<int> cur(static_cast<std::size_t>(f.n), 1);
  while (true) {
    if (std::accumulate(cur.begin(), cur.end(), 0) % f.d == 0) out.push_back(make_char_vector(f, cur));
    int pos = f.n - 1;
    while (pos >= 0 && cur[pos] == f.d - 1) cur[pos--] = 1;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

}  // namespace dwork::testing
