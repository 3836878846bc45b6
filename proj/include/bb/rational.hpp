#pragma once

#include <gmpxx.h>

#include <string>

#include "bb/errors.hpp"

namespace bb {

// Exact rational coefficients. GMP's mpq_class keeps values in lowest terms
// with a positive denominator and represents zero as 0/1, which is exactly
// the canonical form required here. Arithmetic on canonical values stays
// canonical; only the raw (num, den) constructor needs an explicit
// canonicalize, so construction goes through the helpers below.
using Rational = mpq_class;

inline Rational frac(long num, long den = 1) {
    if (den == 0) throw error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "-num" or "num/den" with arbitrary-precision parts.
inline Rational rational_from_string(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0) throw error("invalid rational literal: " + text);
    if (r.get_den() == 0) throw error("zero denominator: " + text);
    r.canonicalize();
    return r;
}

// "num" when the denominator is 1, otherwise "num/den".
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace bb
