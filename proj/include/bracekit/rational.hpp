#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bracekit {

/// Exact scalar type for all infinitesimal computations. cpp_rational keeps
/// the invariants we rely on: denominator > 0, gcd-reduced, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

/// Parses "p", "-p" or "p/q". Throws Error("BadRational", ...) on junk.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace bracekit
