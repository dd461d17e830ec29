#pragma once

#include <gmpxx.h>

#include <string>

#include "eqres/errors.hpp"

namespace eqres {

// Exact rational scalar: always reduced, denominator > 0 (mpq canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "a/b" for non-integers, plain "a" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "a", "-a", "a/b". Throws ParseError on anything else.
inline Rational rational_from_string(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'", 0);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace eqres
