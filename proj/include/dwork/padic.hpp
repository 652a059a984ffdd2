#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dwork/matrix.hpp"
#include "dwork/series.hpp"

namespace dwork {

/// Exact rationals reduced modulo p^N after pulling out a common power of p.
/// Entry k represents p^valuation · entries[k] (mod p^N). valuation is 0 unless
/// some input coefficient had p in its denominator, in which case it is the
/// most negative such exponent and every entry was rescaled by p^-valuation.
struct PadicVector {
  Integer p;
  unsigned precision = 1;
  long valuation = 0;
  std::vector<Integer> entries;  // each in [0, p^N)
};

struct PadicMatrix {
  Integer p;
  unsigned precision = 1;
  long valuation = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;  // row-major
};

PadicVector reduce_mod_p(std::span<const Rational> coeffs, const Integer& p, unsigned precision);
PadicVector reduce_mod_p(const TruncSeries& s, const Integer& p, unsigned precision);
PadicMatrix reduce_mod_p(const RationalMatrix& m, const Integer& p, unsigned precision);

bool is_prime(long p);

}  // namespace dwork
