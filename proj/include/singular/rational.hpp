#pragma once

// Exact rational arithmetic base layer. Everything the library computes that
// can be rational is kept rational (GMP); nothing here rounds.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace singular {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical (reduced) rational from numerator/denominator.
Rat make_rat(const Int& num, const Int& den);

// j / 2^n, reduced.
Rat dyadic_rat(const Int& j, long n);

// base^e for integer base/exponent, e >= 0.
Int pow_int(const Int& base, unsigned long e);

// r^e, e >= 0.
Rat pow_rat(const Rat& r, unsigned long e);

// 2^-n as a rational, n >= 0.
Rat pow2_neg(long n);

// True iff r = j/2^n for some integer j (including integers themselves).
bool is_dyadic(const Rat& r);

// Exponent n of the reduced denominator 2^n of a dyadic rational.
long dyadic_exponent(const Rat& r);

// floor(r) as an Int.
Int floor_rat(const Rat& r);

// Parses "p/q", an integer, or a terminating decimal ("0.3" -> 3/10).
// Throws std::invalid_argument on malformed input; a trailing "..." gets a
// hint to use p/q instead.
Rat parse_rational(const std::string& text);

// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rat& r);

} // namespace singular
