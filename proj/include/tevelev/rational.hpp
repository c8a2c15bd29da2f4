#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace tevelev {

using Integer = mpz_class;
/// Exact rational. GMP keeps it canonical (lowest terms, positive denominator)
/// after every arithmetic operation; `make_rational` canonicalizes raw input.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x) {
    if (is_integer(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Inverse of `to_string`; accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidArgument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidArgument("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw InvalidArgument("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
inline Rational rpow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw InvalidArgument("zero to a negative power");
        return rpow(Rational(Rational(1) / base), -exp);
    }
    Rational out(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                 ipow(base.get_den(), static_cast<unsigned long>(exp)));
    out.canonicalize();
    return out;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Floor division for signed integers.
inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

/// Sparse Laurent polynomial in q with rational coefficients.
class LaurentPoly {
public:
    using Terms = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c, long exponent = 0) { add_term(exponent, c); }

    static LaurentPoly monomial(long exponent, const Rational& c = 1) { return LaurentPoly(c, exponent); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(long exponent, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    /// Multiply by q^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
        return out;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

} // namespace tevelev
