#pragma once
// Exact rational arithmetic used throughout the exact-geometry layer.
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ngon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parse "p/q" or "p" into a Rational; throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("bad rational: ") + s);
    }
}

// Canonical "p/q" (or "p" when q=1) rendering; bit-exact round trip.
inline std::string rational_to_string(const Rational& r) {
    std::string n = numerator(r).str();
    if (denominator(r) == 1) return n;
    return n + "/" + denominator(r).str();
}

} // namespace ngon
