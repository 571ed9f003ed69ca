#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sarkisov {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    return q.str();
}

// Parses "p/q" or "p". Throws std::runtime_error on garbage.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0)
        throw std::runtime_error("parse_rational: zero denominator in '" + s + "'");
    return Rational(num, den);
}

// x mod 1, result in [0, 1).
inline Rational frac_mod1(const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    Int r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

}  // namespace sarkisov
