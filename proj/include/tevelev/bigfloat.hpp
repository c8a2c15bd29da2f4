#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rational.hpp"

namespace tevelev {

/// Bits needed for `digits` decimal digits, plus a small guard.
inline mpfr_prec_t digits_to_bits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

/// Owning MPFR value with an explicit precision. Binary operations use the
/// larger precision of the two operands; there is no global state.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 256) {
        mpfr_init2(v_, bits);
        mpfr_set_ui(v_, 0, MPFR_RNDN);
    }
    BigFloat(long x, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const Integer& x, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const Rational& x, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }

    BigFloat(const BigFloat& o) : BigFloat(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    BigFloat with_precision(mpfr_prec_t bits) const {
        BigFloat r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    /// 2^e
    static BigFloat pow2(long e, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
    friend BigFloat operator-(const BigFloat& a) { return unop(a, mpfr_neg); }
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend BigFloat sqrt(const BigFloat& a) { return unop(a, mpfr_sqrt); }
    friend BigFloat cbrt(const BigFloat& a) { return unop(a, mpfr_cbrt); }
    friend BigFloat abs(const BigFloat& a) { return unop(a, mpfr_abs); }
    friend BigFloat cos(const BigFloat& a) { return unop(a, mpfr_cos); }
    friend BigFloat sin(const BigFloat& a) { return unop(a, mpfr_sin); }
    friend BigFloat atan(const BigFloat& a) { return unop(a, mpfr_atan); }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binop(y, x, mpfr_atan2); }

    friend BigFloat pow(const BigFloat& a, unsigned long e) {
        BigFloat r(a.precision());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent2() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

    /// Nearest integer.
    Integer round() const {
        Integer z;
        BigFloat t(precision());
        mpfr_round(t.v_, v_);
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant digits, e.g. "1.2345e+10".
    std::string to_string(long digits) const {
        if (is_zero()) return "0";
        char* buf = nullptr;
        std::string fmt = "%." + std::to_string(std::max(1L, digits) - 1) + "Re";
        mpfr_asprintf(&buf, fmt.c_str(), v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    /// Fixed notation with `frac` digits after the point.
    std::string to_fixed(long frac) const {
        char* buf = nullptr;
        std::string fmt = "%." + std::to_string(std::max(0L, frac)) + "Rf";
        mpfr_asprintf(&buf, fmt.c_str(), v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    using Bin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using Un = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static BigFloat binop(const BigFloat& a, const BigFloat& b, Bin f) {
        BigFloat r(std::max(a.precision(), b.precision()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat unop(const BigFloat& a, Un f) {
        BigFloat r(a.precision());
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

/// Complex number over BigFloat; only what the closed-form evaluators need.
struct Complex {
    BigFloat re;
    BigFloat im;

    explicit Complex(mpfr_prec_t bits = 256) : re(bits), im(bits) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        BigFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }

    Complex conj() const { return {re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }

    friend Complex pow(Complex base, unsigned long e) {
        Complex r(BigFloat(1, base.precision()), BigFloat(0, base.precision()));
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }
};

} // namespace tevelev
