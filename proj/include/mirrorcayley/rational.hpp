#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mc {

// Exact arbitrary-precision rational. mpq_class keeps results canonical
// (lowest terms, positive denominator) as long as inputs are canonical,
// so the only care needed is at construction from a num/den pair.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool fits_long(const mpz_class& z) { return z.fits_slong_p(); }

inline long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool inv = e < 0;
    unsigned long n = inv ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    if (inv) {
        if (b == 0) throw std::domain_error("0^negative");
        b = 1 / b;
    }
    Rational out(1);
    while (n) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace mc
