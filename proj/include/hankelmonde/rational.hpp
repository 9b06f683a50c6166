#pragma once

// Exact scalars. Rational is GMP's mpq_class, which keeps every value in
// canonical form (positive denominator, coprime numerator and denominator)
// after each arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hankelmonde {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (d != 0) into canonical form.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& x);

Integer factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// k! / (i! j! (k-i-j)!) for i + j <= k, zero otherwise.
Integer multinomial(unsigned k, unsigned i, unsigned j);

} // namespace hankelmonde
