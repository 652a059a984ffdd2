#include "dwork/padic.hpp"

#include <algorithm>

#include "dwork/errors.hpp"

namespace dwork {

PadicVector reduce_mod_p(std::span<const Rational> coeffs, const Integer& p, unsigned precision) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw DomainError("reduce_mod_p: p must be prime");
  if (precision == 0) throw UsageError("reduce_mod_p: precision must be at least 1");
  PadicVector out;
  out.p = p;
  out.precision = precision;
  for (const auto& c : coeffs) {
    if (c != 0) out.valuation = std::min(out.valuation, padic_valuation(c, p));
  }
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), precision);
  Integer rescale;
  mpz_pow_ui(rescale.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-out.valuation));
  out.entries.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rational scaled = c * Rational(rescale);
    Integer den_inv;
    Integer den = scaled.get_den();
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    Integer v = scaled.get_num() * den_inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    out.entries.push_back(v);
  }
  return out;
}

PadicVector reduce_mod_p(const TruncSeries& s, const Integer& p, unsigned precision) {
  return reduce_mod_p(std::span<const Rational>(s.coeffs()), p, precision);
}

PadicMatrix reduce_mod_p(const RationalMatrix& m, const Integer& p, unsigned precision) {
  std::vector<Rational> flat;
  flat.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
  PadicVector v = reduce_mod_p(std::span<const Rational>(flat), p, precision);
  return PadicMatrix{v.p, v.precision, v.valuation, m.rows(), m.cols(), std::move(v.entries)};
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace dwork
