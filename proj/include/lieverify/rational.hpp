#pragma once

#include <gmpxx.h>

#include <string>

namespace lieverify {

// Exact arbitrary-precision rational number. All arithmetic in the library is
// performed over these; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalized rational num/den (mpq_class(a, b) alone does not reduce).
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& x) { return x.get_str(); }

// Parses "p", "p/q", or "-p/q"; canonicalizes.
inline Rational rat_parse(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline bool rat_is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace lieverify
