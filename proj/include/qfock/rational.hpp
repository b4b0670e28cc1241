#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qfock {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the scalar layer relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);

// binomial(n, k) with the convention that out-of-range k gives 0.
Integer binomial(long long n, long long k);

// a (a-1) ... (a-k+1); the empty product for k = 0.
Integer falling_factorial(const Integer& a, unsigned k);

// Largest q with q*q <= v (v >= 0).
unsigned long long isqrt_floor(unsigned long long v);

// "num" when the denominator is 1, otherwise "num/den".
std::string render_rational(const Rational& r);

// Inverse of render_rational; also accepts surrounding whitespace.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Field inverse hook used by the generic elimination routines.
inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }

}  // namespace qfock
