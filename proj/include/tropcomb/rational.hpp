#ifndef TROPCOMB_RATIONAL_HPP
#define TROPCOMB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropcomb {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) as long as they are built through mpq_class
// arithmetic; parse_rational enforces that canonical form on input.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q". Rejects empty input, zero denominators, negative
// denominators and unreduced fractions ("2/4" is an error, not 1/2).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

} // namespace tropcomb

#endif
