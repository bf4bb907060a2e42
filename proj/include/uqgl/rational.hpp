#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "uqgl/errors.hpp"

namespace uqgl {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced
// with positive denominator, which is all the canonical form we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// q0^e for integer e of either sign; e < 0 requires q0 != 0.
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Rational acc(1);
    Rational b = base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1ul) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) acc = Rational(1) / acc;
    return acc;
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace uqgl
