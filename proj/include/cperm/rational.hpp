#pragma once

#include <gmpxx.h>

#include <string>

namespace cperm {

// Exact arithmetic types. Rational values are kept canonical (reduced,
// positive denominator) by GMP; Int is an arbitrary-precision integer.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational out = 1;
    for (unsigned long i = 0; i < e; ++i) out *= base;
    return out;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace cperm
