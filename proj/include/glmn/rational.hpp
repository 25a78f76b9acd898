#ifndef GLMN_RATIONAL_HPP
#define GLMN_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace glmn {

using Integer = mpz_class;

// Exact rational scalar. GMP keeps values canonical: fully reduced with a
// positive denominator, after every operation.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws Error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

bool is_integer(const Rational& q);

// "p" for integers, "p/q" otherwise (reduced, q > 0).
std::string to_string(const Rational& q);

// Accepts "p" and "p/q" with optional signs. Empty result on malformed text
// or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

} // namespace glmn

#endif
