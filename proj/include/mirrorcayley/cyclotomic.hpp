#pragma once

#include <array>
#include <string>

#include "mirrorcayley/rational.hpp"

namespace mc {

// Element of Q(zeta_24), zeta = e^{2 pi i/24}, in the power basis
// 1, zeta, ..., zeta^7 with minimal polynomial x^8 - x^4 + 1.
// Big enough for every algebraic constant the pipelines need:
// i, sqrt2, sqrt3, zeta_3, e^{+-i pi/4}, e^{+-i pi/3} all live here.
class Cyc {
  public:
    Cyc() { c_.fill(Rational(0)); }
    explicit Cyc(const Rational& r) : Cyc() { c_[0] = r; }
    explicit Cyc(long n) : Cyc(Rational(n)) {}
    static Cyc from_coeffs(const std::array<Rational, 8>& c) {
        Cyc z;
        z.c_ = c;
        return z;
    }

    const std::array<Rational, 8>& coeffs() const { return c_; }
    Rational& operator[](int i) { return c_[i]; }
    const Rational& operator[](int i) const { return c_[i]; }

    // zeta^k for any integer k, reduced into the basis
    static Cyc zeta_pow(long k);

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(Rational(1)); }
    static Cyc i() { return zeta_pow(6); }
    static Cyc sqrt2() { return zeta_pow(1) + zeta_pow(3) - zeta_pow(5); }
    static Cyc sqrt3() { return Cyc(Rational(2)) * zeta_pow(2) - zeta_pow(6); }
    static Cyc zeta3() { return zeta_pow(8); }
    // e^{i pi k/12} = zeta^k
    static Cyc exp_i_pi(const Rational& frac);  // frac must be a multiple of 1/12

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator*(const Rational& r) const;
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }
    Cyc conj() const;  // complex conjugation, zeta -> zeta^{-1}

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    bool operator==(const Cyc& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws unless is_rational()

    std::string str() const;

  private:
    std::array<Rational, 8> c_;
};

inline Cyc operator*(const Rational& r, const Cyc& z) { return z * r; }

// sqrt of a positive rational inside Q(zeta_24), if it exists
// (squarefree part must be one of 1, 2, 3, 6); throws otherwise.
Cyc cyc_sqrt_rational(const Rational& r);

}  // namespace mc
