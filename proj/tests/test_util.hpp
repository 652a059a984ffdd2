#pragma once

#include <random>

#include "dwork/rational.hpp"
#include "dwork/series.hpp"

namespace dwork::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 9) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return make_rational(num(rng), den(rng));
}

inline TruncSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit = false) {
  TruncSeries s(order);
  for (std::size_t k = 0; k < order; ++k) s[k] = random_rational(rng);
  while (unit && s[0] == 0) s[0] = random_rational(rng);
  return s;
}

}  // namespace dwork::testing
