#pragma once

// Exact integers and rationals. Both are GMP types; mpq_class keeps values
// canonical (lowest terms, positive denominator) after every arithmetic op.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace minshadow {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(a, k); zero when k < 0 or k > a.
/// Negative a is rejected: negative powers are expanded through
/// (1 - y^2)^{-a} in the series module instead.
BigInt binom(long a, long k);

/// 2^e as an exact rational (e may be negative).
Rational pow2(long e);

/// num/den in lowest terms; throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// a / b; throws std::domain_error when b == 0.
Rational checked_div(const Rational& a, const Rational& b);

bool is_integer(const Rational& x);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Inverse of to_string. Accepts an optional sign, "p" or "p/q".
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace minshadow
