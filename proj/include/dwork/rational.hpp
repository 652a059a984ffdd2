#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dwork {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: gcd(num, den) = 1, den > 0

Rational make_rational(long num, long den = 1);

// "num/den", or just "num" when den = 1.
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b". Throws UsageError on malformed input or b = 0.
Rational parse_rational(std::string_view text);

// Exponent of p in q; q must be nonzero.
long padic_valuation(const Rational& q, const Integer& p);

}  // namespace dwork
