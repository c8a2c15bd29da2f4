#pragma once

#include <string>
#include <utility>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace tevelev {

/// n = s^2 k with k squarefree and sign(k) = sign(n). Returns {s, k}.
inline std::pair<Integer, Integer> squarefree_split(Integer n) {
    if (n == 0) return {0, 0};
    Integer sign = n < 0 ? -1 : 1;
    n = abs(n);
    Integer s = 1, k = 1;
    const unsigned long limit = 1000000;
    for (unsigned long p = 2; p <= limit && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) k *= p;
    }
    // n has no factor <= limit: it is 1, a prime, a product of two primes, or a square
    if (n > 1) {
        if (n >= Integer(limit) * limit * limit) throw NumericalFailure("squarefree part out of range");
        if (mpz_perfect_square_p(n.get_mpz_t())) s *= sqrt(n);
        else k *= n;
    }
    return {s, sign * k};
}

/// a + b sqrt(k) with k a squarefree integer > 1, or a plain rational when
/// b = 0 (k then 1 by convention).
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(const Rational& a) : a_(a) {} // NOLINT(google-explicit-constructor)
    QuadSurd(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadSurd(const Rational& a, const Rational& b, const Integer& k) : a_(a), b_(b), k_(k) {
        if (k_ < 2) {
            if (b_ != 0 && k_ != 1) throw InvalidArgument("surd radicand must be a squarefree integer > 1");
            a_ += b_;
            b_ = 0;
            k_ = 1;
        }
        if (b_ == 0) k_ = 1;
    }

    /// sqrt(n) for any non-negative rational n.
    static QuadSurd sqrt_of(const Rational& n) {
        if (n < 0) throw InvalidArgument("square root of a negative rational");
        // sqrt(p/q) = sqrt(p q) / q
        auto [s, k] = squarefree_split(n.get_num() * n.get_den());
        return QuadSurd(0, make_rational(s, n.get_den()), k);
    }

    const Rational& rational() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    const Integer& radicand() const { return k_; }
    bool is_rational() const { return b_ == 0; }

    QuadSurd conj() const { return QuadSurd(a_, -b_, k_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * k_; }

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
        Integer k = common(x, y);
        return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, k);
    }
    friend QuadSurd operator-(const QuadSurd& x) { return QuadSurd(-x.a_, -x.b_, x.k_); }
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
        Integer k = common(x, y);
        return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * k, x.a_ * y.b_ + x.b_ * y.a_, k);
    }
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
        Rational n = y.norm();
        if (n == 0) throw InvalidArgument("surd division by zero");
        QuadSurd t = x * y.conj();
        return QuadSurd(t.a_ / n, t.b_ / n, t.k_);
    }
    QuadSurd& operator+=(const QuadSurd& y) { return *this = *this + y; }
    QuadSurd& operator-=(const QuadSurd& y) { return *this = *this - y; }
    QuadSurd& operator*=(const QuadSurd& y) { return *this = *this * y; }
    QuadSurd& operator/=(const QuadSurd& y) { return *this = *this / y; }
    friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.k_ == y.k_);
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Exact sign.
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // opposite signs: compare a^2 with b^2 k
        int c = cmp(a_ * a_, b_ * b_ * k_);
        return c > 0 ? sa : (c < 0 ? sb : 0);
    }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }

    BigFloat to_bigfloat(mpfr_prec_t bits) const {
        BigFloat v(a_, bits);
        if (b_ != 0) v += BigFloat(b_, bits) * sqrt(BigFloat(k_, bits));
        return v;
    }

    /// "1/2 - 1/10*sqrt(5)"
    std::string to_string() const {
        if (b_ == 0) return tevelev::to_string(a_);
        std::string surd = "sqrt(" + k_.get_str() + ")";
        Rational ab = abs(b_);
        std::string bpart = ab == 1 ? surd : tevelev::to_string(ab) + "*" + surd;
        if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
        return tevelev::to_string(a_) + (b_ < 0 ? " - " : " + ") + bpart;
    }

private:
    static Integer common(const QuadSurd& x, const QuadSurd& y) {
        if (x.b_ == 0) return y.k_;
        if (y.b_ == 0) return x.k_;
        if (x.k_ != y.k_) throw InvalidArgument("surds from different quadratic fields");
        return x.k_;
    }

    Rational a_ = 0;
    Rational b_ = 0;
    Integer k_ = 1;
};

inline QuadSurd pow(const QuadSurd& x, unsigned long e) {
    QuadSurd out(1), base = x;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace tevelev
