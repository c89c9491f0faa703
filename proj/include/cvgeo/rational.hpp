#ifndef CVGEO_RATIONAL_HPP
#define CVGEO_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace cvgeo {

// Exact arbitrary-precision rational. GMP keeps values canonical (reduced
// fraction, positive denominator) through arithmetic.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p", "p/q", or a plain decimal like "-1.25" into a canonical
// rational. Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" form (q > 1 only when needed).
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact rational with the same value as the double (doubles are dyadic).
Rational rational_from_double(double x);

} // namespace cvgeo

#endif
