#include "mirrorcayley/cyclotomic.hpp"

#include <sstream>
#include <vector>

namespace mc {

Cyc Cyc::zeta_pow(long k) {
    k %= 24;
    if (k < 0) k += 24;
    // zeta^12 = -1, zeta^8 = zeta^4 - 1
    Rational sign(1);
    if (k >= 12) {
        k -= 12;
        sign = -1;
    }
    Cyc z;
    if (k < 8) {
        z.c_[k] = sign;
    } else {  // k in 8..11: zeta^k = zeta^{k-4} - zeta^{k-8}
        z.c_[k - 4] = sign;
        z.c_[k - 8] = -sign;
    }
    return z;
}

Cyc Cyc::exp_i_pi(const Rational& frac) {
    Rational t = frac * 12;  // e^{i pi frac} = zeta^{12 frac}
    if (!is_integer(t)) throw std::invalid_argument("exp_i_pi: exponent not a multiple of 1/12");
    return zeta_pow(to_long(t.get_num()));
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc z;
    for (int i = 0; i < 8; ++i) z.c_[i] = c_[i] + o.c_[i];
    return z;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc z;
    for (int i = 0; i < 8; ++i) z.c_[i] = c_[i] - o.c_[i];
    return z;
}

Cyc Cyc::operator-() const {
    Cyc z;
    for (int i = 0; i < 8; ++i) z.c_[i] = -c_[i];
    return z;
}

Cyc Cyc::operator*(const Rational& r) const {
    Cyc z;
    for (int i = 0; i < 8; ++i) z.c_[i] = c_[i] * r;
    return z;
}

Cyc Cyc::operator*(const Cyc& o) const {
    std::array<Rational, 15> t;
    t.fill(Rational(0));
    for (int i = 0; i < 8; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 8; ++j)
            if (o.c_[j] != 0) t[i + j] += c_[i] * o.c_[j];
    }
    // reduce with zeta^k = zeta^{k-4} - zeta^{k-8} for k >= 8
    for (int k = 14; k >= 8; --k) {
        if (t[k] == 0) continue;
        t[k - 4] += t[k];
        t[k - 8] -= t[k];
        t[k] = 0;
    }
    Cyc z;
    for (int i = 0; i < 8; ++i) z.c_[i] = t[i];
    return z;
}

Cyc Cyc::conj() const {
    Cyc z;
    for (int i = 0; i < 8; ++i) {
        if (c_[i] == 0) continue;
        z += zeta_pow(24 - i) * c_[i];
    }
    return z;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (int i = 1; i < 8; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyc::rational_part() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_24)");
    // solve (this) * y = 1 as an 8x8 rational linear system
    // column j of the matrix = coordinates of this * zeta^j
    std::array<std::array<Rational, 9>, 8> m;  // augmented
    for (int j = 0; j < 8; ++j) {
        Cyc col = *this * zeta_pow(j);
        for (int i = 0; i < 8; ++i) m[i][j] = col.c_[i];
    }
    for (int i = 0; i < 8; ++i) m[i][8] = (i == 0) ? Rational(1) : Rational(0);
    // Gaussian elimination with exact pivoting
    for (int col = 0, row = 0; col < 8 && row < 8; ++col, ++row) {
        int piv = -1;
        for (int r = row; r < 8; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("singular multiplication matrix in Q(zeta_24)");
        std::swap(m[row], m[piv]);
        Rational d = m[row][col];
        for (int k = col; k <= 8; ++k) m[row][k] /= d;
        for (int r = 0; r < 8; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int k = col; k <= 8; ++k) m[r][k] -= f * m[row][k];
        }
    }
    Cyc y;
    for (int i = 0; i < 8; ++i) y.c_[i] = m[i][8];
    return y;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[i]);
        if (i > 0) os << "*z24^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyc cyc_sqrt_rational(const Rational& r) {
    if (r < 0) throw std::domain_error("cyc_sqrt_rational: negative argument");
    if (r == 0) return Cyc::zero();
    // write r = (p/q); sqrt(r) = sqrt(p q)/q; factor out squares from p q
    mpz_class n = r.get_num() * r.get_den();
    mpz_class sq(1), rem(1);
    mpz_class d(2);
    mpz_class nn = n;
    while (d * d <= nn) {
        while (mpz_divisible_p(nn.get_mpz_t(), (d * d).get_mpz_t())) {
            nn /= d * d;
            sq *= d;
        }
        if (mpz_divisible_p(nn.get_mpz_t(), d.get_mpz_t())) {
            nn /= d;
            rem *= d;
        }
        d += 1;
    }
    rem *= nn;  // squarefree part
    Rational scale(sq, r.get_den());
    scale.canonicalize();
    if (rem == 1) return Cyc(scale);
    if (rem == 2) return Cyc::sqrt2() * scale;
    if (rem == 3) return Cyc::sqrt3() * scale;
    if (rem == 6) return Cyc::sqrt2() * Cyc::sqrt3() * scale;
    throw std::domain_error("sqrt(" + rat_str(r) + ") does not lie in Q(zeta_24)");
}

}  // namespace mc
