#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hsubdiv {

// Arbitrary-precision exact arithmetic. Every scalar in the library is a
// Rational; floating point appears only at the output boundary (CSV decimals).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in lowest terms, sign carried by the numerator.
/// Throws InputError on a zero denominator.
Rational rat(const Int& num, const Int& den);
Rational rat(long long num, long long den = 1);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading sign on either part, digits only).
/// Throws InputError on anything else, including q == 0.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// 2^exp for any integer exp.
Rational pow2(int exp);

Rational pow_rat(const Rational& base, int exp);

Int factorial(int n);
Int binomial(int n, int k);

/// l (l-1) ... (l-k+1); the k = 0 product is 1.
Int falling_factorial(const Int& l, int k);

} // namespace hsubdiv
