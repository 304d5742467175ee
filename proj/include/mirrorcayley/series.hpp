#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorcayley/cyclotomic.hpp"
#include "mirrorcayley/rational.hpp"

namespace mc {

// Scalar glue so the series engine works over Q and over Q(zeta_24).
template <typename S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inv(const Rational& x) {
        if (x == 0) throw std::domain_error("division by zero scalar");
        return 1 / x;
    }
    static Rational from_rational(const Rational& r) { return r; }
    static std::string str(const Rational& x) { return rat_str(x); }
};

template <>
struct ScalarOps<Cyc> {
    static Cyc zero() { return Cyc::zero(); }
    static Cyc one() { return Cyc::one(); }
    static bool is_zero(const Cyc& x) { return x.is_zero(); }
    static Cyc inv(const Cyc& x) { return x.inverse(); }
    static Cyc from_rational(const Rational& r) { return Cyc(r); }
    static std::string str(const Cyc& x) { return x.str(); }
};

// Truncated formal power series: coefficients 0..trunc are exact, nothing is
// known beyond. Every operation tracks the tightest truncation that is still
// fully determined by its inputs; comparisons past the common truncation are
// refused rather than guessed.
template <typename S>
class PowerSeries {
  public:
    using Ops = ScalarOps<S>;

    PowerSeries() : var_("x"), c_(1, Ops::zero()) {}
    PowerSeries(std::string var, int trunc)
        : var_(std::move(var)), c_(static_cast<size_t>(check_trunc(trunc)) + 1, Ops::zero()) {}
    PowerSeries(std::string var, std::vector<S> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("empty coefficient list");
    }

    static PowerSeries constant(const S& value, const std::string& var, int trunc) {
        PowerSeries p(var, trunc);
        p.c_[0] = value;
        return p;
    }
    static PowerSeries identity(const std::string& var, int trunc) {
        PowerSeries p(var, trunc);
        if (trunc >= 1) p.c_[1] = Ops::one();
        return p;
    }

    const std::string& var() const { return var_; }
    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }

    const S& at(int n) const {
        if (n < 0 || n > trunc())
            throw std::out_of_range("coefficient index " + std::to_string(n) +
                                    " beyond truncation " + std::to_string(trunc()));
        return c_[static_cast<size_t>(n)];
    }
    void set(int n, const S& v) { c_.at(static_cast<size_t>(n)) = v; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!Ops::is_zero(x)) return false;
        return true;
    }

    // order of the first nonzero coefficient; -1 if zero to truncation
    int valuation() const {
        for (int n = 0; n <= trunc(); ++n)
            if (!Ops::is_zero(c_[static_cast<size_t>(n)])) return n;
        return -1;
    }

    PowerSeries truncated(int new_trunc) const {
        if (new_trunc > trunc())
            throw std::invalid_argument("cannot extend truncation " + std::to_string(trunc()) +
                                        " to " + std::to_string(new_trunc));
        PowerSeries p(var_, new_trunc);
        for (int n = 0; n <= new_trunc; ++n) p.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        return p;
    }

    PowerSeries with_var(const std::string& v) const {
        PowerSeries p = *this;
        p.var_ = v;
        return p;
    }

    // multiply by x^k (k >= 0 keeps all information; the new top coefficients are known)
    PowerSeries shifted(int k) const {
        if (k < 0) throw std::invalid_argument("negative shift");
        PowerSeries p(var_, trunc() + k);
        for (int n = 0; n <= trunc(); ++n) p.c_[static_cast<size_t>(n + k)] = c_[static_cast<size_t>(n)];
        return p;
    }

    PowerSeries operator-() const {
        PowerSeries p = *this;
        for (auto& x : p.c_) x = -x;
        return p;
    }

    PowerSeries operator+(const PowerSeries& o) const {
        int t = common_trunc(o);
        PowerSeries p(var_, t);
        for (int n = 0; n <= t; ++n) p.c_[static_cast<size_t>(n)] = at(n) + o.at(n);
        return p;
    }
    PowerSeries operator-(const PowerSeries& o) const {
        int t = common_trunc(o);
        PowerSeries p(var_, t);
        for (int n = 0; n <= t; ++n) p.c_[static_cast<size_t>(n)] = at(n) - o.at(n);
        return p;
    }
    PowerSeries operator*(const PowerSeries& o) const {
        int t = common_trunc(o);
        PowerSeries p(var_, t);
        for (int i = 0; i <= t; ++i) {
            if (Ops::is_zero(at(i))) continue;
            for (int j = 0; j + i <= t; ++j) {
                if (Ops::is_zero(o.at(j))) continue;
                p.c_[static_cast<size_t>(i + j)] += at(i) * o.at(j);
            }
        }
        return p;
    }
    PowerSeries operator*(const S& s) const {
        PowerSeries p = *this;
        for (auto& x : p.c_) x = x * s;
        return p;
    }
    PowerSeries operator/(const PowerSeries& o) const { return *this * o.inverse_series(); }

    PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
    PowerSeries& operator-=(const PowerSeries& o) { return *this = *this - o; }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    // multiplicative inverse; requires invertible constant term
    PowerSeries inverse_series() const {
        if (Ops::is_zero(at(0)))
            throw std::domain_error("series in '" + var_ + "' has zero constant term, not invertible");
        int t = trunc();
        PowerSeries g(var_, t);
        S c0inv = Ops::inv(at(0));
        g.c_[0] = c0inv;
        for (int n = 1; n <= t; ++n) {
            S acc = Ops::zero();
            for (int k = 1; k <= n; ++k) acc += at(k) * g.c_[static_cast<size_t>(n - k)];
            g.c_[static_cast<size_t>(n)] = -(acc * c0inv);
        }
        return g;
    }

    // equal on the common truncation range (same variable required)
    bool operator==(const PowerSeries& o) const {
        int t = common_trunc(o);
        for (int n = 0; n <= t; ++n)
            if (!(at(n) == o.at(n))) return false;
        return true;
    }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

    // strict agreement check to a requested order; refuses to compare deeper
    // than the information either side actually carries
    bool agree_to(const PowerSeries& o, int order) const {
        if (var_ != o.var_) throw std::invalid_argument("variable mismatch: " + var_ + " vs " + o.var_);
        if (order > trunc() || order > o.trunc())
            throw std::invalid_argument("comparison to order " + std::to_string(order) +
                                        " exceeds truncation " + std::to_string(std::min(trunc(), o.trunc())));
        for (int n = 0; n <= order; ++n)
            if (!(at(n) == o.at(n))) return false;
        return true;
    }

    // order of the first differing coefficient within the common range, or -1
    int first_mismatch(const PowerSeries& o) const {
        int t = common_trunc(o);
        for (int n = 0; n <= t; ++n)
            if (!(at(n) == o.at(n))) return n;
        return -1;
    }

  private:
    static int check_trunc(int t) {
        if (t < 0) throw std::invalid_argument("negative truncation order");
        return t;
    }
    int common_trunc(const PowerSeries& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument("variable mismatch: '" + var_ + "' vs '" + o.var_ + "'");
        return std::min(trunc(), o.trunc());
    }

    std::string var_;
    std::vector<S> c_;
};

template <typename S>
PowerSeries<S> operator*(const S& s, const PowerSeries<S>& p) {
    return p * s;
}

// outer(inner); inner must have zero constant term. Exact to
// min(outer.trunc, inner.trunc).
template <typename S>
PowerSeries<S> ps_compose(const PowerSeries<S>& outer, const PowerSeries<S>& inner) {
    if (!ScalarOps<S>::is_zero(inner.at(0)))
        throw std::domain_error("composition requires inner series with zero constant term");
    int t = std::min(outer.trunc(), inner.trunc());
    PowerSeries<S> res(inner.var(), t);
    for (int k = std::min(outer.trunc(), t); k >= 0; --k) {
        res = res * inner.truncated(t);
        res.set(0, res.at(0) + outer.at(k));
    }
    return res;
}

// formal derivative d/dx; one order of information is spent
template <typename S>
PowerSeries<S> ps_derive(const PowerSeries<S>& f) {
    if (f.trunc() == 0) throw std::invalid_argument("cannot differentiate an order-0 series");
    PowerSeries<S> g(f.var(), f.trunc() - 1);
    for (int n = 1; n <= f.trunc(); ++n)
        g.set(n - 1, f.at(n) * ScalarOps<S>::from_rational(Rational(n)));
    return g;
}

// theta operator x d/dx; no information is lost
template <typename S>
PowerSeries<S> ps_theta(const PowerSeries<S>& f) {
    PowerSeries<S> g(f.var(), f.trunc());
    for (int n = 1; n <= f.trunc(); ++n)
        g.set(n, f.at(n) * ScalarOps<S>::from_rational(Rational(n)));
    return g;
}

// antiderivative with constant 0; gains one order
template <typename S>
PowerSeries<S> ps_integrate(const PowerSeries<S>& f) {
    PowerSeries<S> g(f.var(), f.trunc() + 1);
    for (int n = 0; n <= f.trunc(); ++n)
        g.set(n + 1, f.at(n) * ScalarOps<S>::from_rational(Rational(1, n + 1)));
    return g;
}

template <typename S>
PowerSeries<S> ps_log(const PowerSeries<S>& f) {
    if (!(f.at(0) == ScalarOps<S>::one()))
        throw std::domain_error("log requires constant term 1");
    if (f.trunc() == 0) return PowerSeries<S>(f.var(), 0);
    return ps_integrate(ps_derive(f) / f.truncated(f.trunc() - 1));
}

template <typename S>
PowerSeries<S> ps_exp(const PowerSeries<S>& f) {
    if (!ScalarOps<S>::is_zero(f.at(0)))
        throw std::domain_error("exp requires constant term 0");
    int t = f.trunc();
    PowerSeries<S> g(f.var(), t);
    g.set(0, ScalarOps<S>::one());
    // g' = f' g  =>  n g_n = sum_{k=1..n} k f_k g_{n-k}
    for (int n = 1; n <= t; ++n) {
        S acc = ScalarOps<S>::zero();
        for (int k = 1; k <= n; ++k)
            acc += f.at(k) * ScalarOps<S>::from_rational(Rational(k)) * g.at(n - k);
        g.set(n, acc * ScalarOps<S>::from_rational(Rational(1, n)));
    }
    return g;
}

template <typename S>
PowerSeries<S> ps_nth_root(const PowerSeries<S>& f, long n) {
    if (n <= 0) throw std::invalid_argument("nth_root requires n >= 1");
    if (!(f.at(0) == ScalarOps<S>::one()))
        throw std::domain_error("nth_root requires constant term 1");
    PowerSeries<S> lg = ps_log(f);
    return ps_exp(lg * ScalarOps<S>::from_rational(Rational(1, n)));
}

template <typename S>
PowerSeries<S> ps_pow_int(const PowerSeries<S>& f, long e) {
    if (e < 0) return ps_pow_int(f.inverse_series(), -e);
    PowerSeries<S> acc = PowerSeries<S>::constant(ScalarOps<S>::one(), f.var(), f.trunc());
    PowerSeries<S> b = f;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

// compositional inverse by Newton iteration: find g with f(g(x)) = x.
// Requires f(0) = 0 and invertible linear coefficient.
template <typename S>
PowerSeries<S> ps_reverse(const PowerSeries<S>& f) {
    if (!ScalarOps<S>::is_zero(f.at(0))) throw std::domain_error("reversion requires zero constant term");
    if (f.trunc() < 1 || ScalarOps<S>::is_zero(f.at(1)))
        throw std::domain_error("reversion requires invertible linear coefficient");
    int T = f.trunc();
    S lin_inv = ScalarOps<S>::inv(f.at(1));
    // start at order 1 and double the working order each round
    int m = 1;
    PowerSeries<S> g(f.var(), 1);
    g.set(1, lin_inv);
    PowerSeries<S> fprime = ps_derive(f);  // trunc T-1, enough for every step
    while (m < T) {
        m = std::min(2 * m, T);
        // pad g with zeros to working order m; Newton double-corrects them
        PowerSeries<S> gm(f.var(), m);
        for (int n = 0; n <= std::min(m, g.trunc()); ++n) gm.set(n, g.at(n));
        // Newton step: g <- g - (f(g) - x)/f'(g)
        PowerSeries<S> fg = ps_compose(f.truncated(std::min(m, f.trunc())), gm);
        PowerSeries<S> err = fg - PowerSeries<S>::identity(f.var(), m);
        int val = err.valuation();
        if (val < 0) {
            g = gm;
            continue;
        }
        // err = x^val * err_low; the update err/f'(g) only needs f'(g) to
        // order m - val, which fprime's truncation always covers
        PowerSeries<S> err_low(f.var(), m - val);
        for (int n = 0; n <= m - val; ++n) err_low.set(n, err.at(n + val));
        PowerSeries<S> fpg = ps_compose(fprime.truncated(std::min(m - val, fprime.trunc())), gm.truncated(std::min(m - val, m)));
        PowerSeries<S> upd = (err_low / fpg).shifted(val).truncated(m);
        g = gm - upd;
    }
    return g;
}

// ---------------------------------------------------------------------------
// FracSeries: x^offset * body, offset rational. Used for eta quotients and
// theta constants whose expansions start at fractional powers of q.
template <typename S>
class FracSeries {
  public:
    FracSeries() : offset_(0) {}
    FracSeries(Rational offset, PowerSeries<S> body) : offset_(std::move(offset)), body_(std::move(body)) {}
    explicit FracSeries(const PowerSeries<S>& body) : offset_(0), body_(body) {}

    const Rational& offset() const { return offset_; }
    const PowerSeries<S>& body() const { return body_; }
    const std::string& var() const { return body_.var(); }
    int trunc() const { return body_.trunc(); }

    FracSeries operator-() const { return FracSeries(offset_, -body_); }

    FracSeries operator*(const FracSeries& o) const {
        return FracSeries(offset_ + o.offset_, body_ * o.body_);
    }
    FracSeries operator*(const S& s) const { return FracSeries(offset_, body_ * s); }
    FracSeries operator/(const FracSeries& o) const {
        FracSeries d = o.normalized();
        return FracSeries(offset_ - d.offset_, body_ / d.body_);
    }

    FracSeries operator+(const FracSeries& o) const { return add_sub(o, false); }
    FracSeries operator-(const FracSeries& o) const { return add_sub(o, true); }

    // theta operator q d/dq acting on q^e * body
    FracSeries theta() const {
        return FracSeries(offset_, ps_theta(body_) + body_ * ScalarOps<S>::from_rational(offset_));
    }

    // move any leading zero coefficients of the body into the offset
    FracSeries normalized() const {
        int val = body_.valuation();
        if (val <= 0) return *this;
        PowerSeries<S> b(body_.var(), body_.trunc() - val);
        for (int n = 0; n <= b.trunc(); ++n) b.set(n, body_.at(n + val));
        return FracSeries(offset_ + Rational(val), b);
    }

    bool is_zero() const { return body_.is_zero(); }

    PowerSeries<S> to_power_series() const {
        FracSeries f = *this;
        if (f.offset_ != 0 && f.offset_ < 0) f = f.normalized();
        if (!is_integer(f.offset_) || f.offset_ < 0)
            throw std::domain_error("offset " + rat_str(f.offset_) +
                                    " is not a nonnegative integer; cannot convert to plain series");
        return f.body_.shifted(to_long(f.offset_.get_num()));
    }

    FracSeries pow_int(long e) const {
        if (e < 0) return inverse_pow(-e);
        return FracSeries(offset_ * Rational(e), ps_pow_int(body_, e));
    }

    FracSeries nth_root(long n) const {
        if (n <= 0) throw std::invalid_argument("nth_root requires n >= 1");
        FracSeries f = normalized();
        Rational e = f.offset_ / n;
        return FracSeries(e, ps_nth_root(f.body_, n));
    }

    bool operator==(const FracSeries& o) const {
        FracSeries a = normalized(), b = o.normalized();
        if (a.is_zero() && b.is_zero()) return true;
        if (a.offset_ != b.offset_) return false;
        return a.body_ == b.body_;
    }
    bool operator!=(const FracSeries& o) const { return !(*this == o); }

    // exponent (offset + index) of the first nonzero coefficient difference
    // within common knowledge, if any
    struct Diff {
        bool differs = false;
        Rational exponent;
    };
    Diff first_difference(const FracSeries& o) const {
        FracSeries d = *this - o;
        int val = d.body_.valuation();
        if (val < 0) return {};
        return {true, d.offset_ + Rational(val)};
    }

  private:
    FracSeries inverse_pow(long e) const {
        FracSeries d = normalized();
        FracSeries inv(-d.offset_, d.body_.inverse_series());
        return inv.pow_int(e);
    }

    FracSeries add_sub(const FracSeries& o, bool sub) const {
        Rational diff = o.offset_ - offset_;
        if (!is_integer(diff))
            throw std::domain_error("offsets " + rat_str(offset_) + " and " + rat_str(o.offset_) +
                                    " differ by a non-integer; cannot add");
        const FracSeries* lo = this;
        const FracSeries* hi = &o;
        bool swapped = false;
        if (diff < 0) {
            std::swap(lo, hi);
            diff = -diff;
            swapped = true;
        }
        long d = to_long(diff.get_num());
        // knowledge: lo exact on 0..T_lo, shifted hi exact on d..d+T_hi
        int t = static_cast<int>(std::min<long>(lo->body_.trunc(), d + hi->body_.trunc()));
        PowerSeries<S> b(lo->body_.var(), t);
        for (int n = 0; n <= t; ++n) {
            S x = (n <= lo->body_.trunc()) ? lo->body_.at(n) : ScalarOps<S>::zero();
            S y = (n >= d && n - d <= hi->body_.trunc()) ? hi->body_.at(static_cast<int>(n - d))
                                                         : ScalarOps<S>::zero();
            // result is *this - o when sub: lo holds *this unless we swapped
            S xv = (sub && swapped) ? -x : x;
            S yv = (sub && !swapped) ? -y : y;
            b.set(n, xv + yv);
        }
        return FracSeries(lo->offset_, b);
    }

    Rational offset_;
    PowerSeries<S> body_;
};

using Series = PowerSeries<Rational>;
using CycSeries = PowerSeries<Cyc>;
using QSeries = FracSeries<Rational>;

}  // namespace mc
