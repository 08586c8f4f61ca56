#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace stringyk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serialized form is always "num/den" in lowest terms, e.g. "3/1", "-1/2".
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "num/den" or a bare integer string.
Rational parse_rational(const std::string& s);

// Fractional part in [0,1).
inline Rational frac_mod1(const Rational& r) {
    Integer n = numerator(r), d = denominator(r);
    Integer q = n / d;
    Rational f = r - Rational(q);
    if (f < 0) f += 1;
    return f;
}

} // namespace stringyk
