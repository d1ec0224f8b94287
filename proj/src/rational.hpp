#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exspectra {

// Exact rational scalar. Arbitrary-precision integer parts, always canonical.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Nearest-double conversion; exact division when both parts fit in 53 bits.
inline double to_double(const Rational& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 &&
        mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
        return num.get_d() / den.get_d();
    }
    return q.get_d();
}

// "p" or "p/q", canonical reduced form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace exspectra
