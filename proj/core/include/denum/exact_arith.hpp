#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace denum {

/// Arbitrary-precision signed integer. Every coefficient, modulus and
/// intermediate sum in this library is exact at any magnitude.
using Int = mpz_class;

/// A solution count. Same representation as Int; non-negativity is an
/// invariant of the operations that produce one.
using Count = mpz_class;

struct GcdLcm {
  Int gcd;
  Int lcm;
};

/// gcd and lcm of a non-empty list of positive integers. The lcm is exact;
/// for many coprime entries it routinely exceeds machine words.
/// Throws InvalidInputError on an empty list or a non-positive entry.
GcdLcm gcd_lcm_all(std::span<const Int> values);

/// Rising-factorial binomial: k(k+1)...(k+l-1) / l! when k >= 1, else 0.
/// Equals binomial(k+l-1, l) for k >= 1; always an exact integer.
/// Total over all integer k; l = 0 yields 1 for k >= 1 (empty product).
Count rising_binomial(const Int& k, unsigned long l);

/// Number of non-negative integer solutions of x_1 + ... + x_n = m.
/// Zero for m < 0. Throws InvalidInputError when n == 0.
Count stars_and_bars(const Int& m, unsigned long n);

/// Strict non-negative decimal parse: digits only, no signs, no blanks.
/// Throws InvalidInputError otherwise.
Int parse_unsigned_decimal(const std::string& text);

}  // namespace denum
