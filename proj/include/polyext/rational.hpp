#ifndef POLYEXT_RATIONAL_HPP
#define POLYEXT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace polyext {

// All scalars in the library are exact rationals. Values are kept canonical
// (gcd(|num|, den) = 1, den > 0) so that equality, ordering and vertex
// deduplication are structural.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Builds a canonical rational. Throws ValidationError if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "p" or "p/q" (optional sign on either part, q != 0) and
// canonicalizes. Throws ValidationError on anything else.
Rational parse_rational(const std::string& text);

// Canonical serialization: "3", "-1/2".
std::string to_string(const Rational& value);

} // namespace polyext

#endif
