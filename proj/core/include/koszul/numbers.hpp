#pragma once

#include <gmpxx.h>

#include <string>

namespace koszul {

using Int = mpz_class;
using Rat = mpq_class;

// binom(n, k) with the usual conventions: 0 for k < 0 or n < k when n >= 0,
// and 0 for negative n (the series expansions never need the negative-upper
// variant).
Int binomial(long n, long k);

Int int_pow(const Int& base, unsigned long exp);

// 10^e, used by the acceptance windows for huge coefficients.
Int pow10(unsigned long e);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace koszul
