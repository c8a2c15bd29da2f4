#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "surd.hpp"

namespace tevelev {

/// An exact element of Q(sqrt k) or a high-precision complex number.
using Scalar = std::variant<QuadSurd, Complex>;

inline bool is_exact(const Scalar& s) { return std::holds_alternative<QuadSurd>(s); }

inline Complex to_complex(const Scalar& s, mpfr_prec_t bits) {
    if (const auto* q = std::get_if<QuadSurd>(&s)) return {q->to_bigfloat(bits), BigFloat(0L, bits)};
    const auto& c = std::get<Complex>(s);
    return {c.re.with_precision(bits), c.im.with_precision(bits)};
}

inline std::string scalar_to_string(const Scalar& s, long digits) {
    if (const auto* q = std::get_if<QuadSurd>(&s)) return q->to_string();
    const auto& c = std::get<Complex>(s);
    if (c.im.is_zero()) return c.re.to_string(digits);
    BigFloat ai = abs(c.im);
    return c.re.to_string(digits) + (c.im.sign() < 0 ? " - " : " + ") + ai.to_string(digits) + "*i";
}

/// Sign factor attached to a term as a function of the degree d.
enum class Parity { None, PowD, PowHalfD };

inline std::string parity_name(Parity p) {
    switch (p) {
    case Parity::None: return "none";
    case Parity::PowD: return "(-1)^d";
    case Parity::PowHalfD: return "(-1)^(d/2)";
    }
    return "none";
}

struct ClosedFormTerm {
    Scalar weight;
    Scalar base;
    Parity parity = Parity::None;
};

/// sum_i weight_i * parity_i(d) * base_i^g, valid where d_q d = dim (n + g - 1)
/// and, when `residue` is set, n + g = residue mod ord_p.
struct ClosedForm {
    std::string space;
    long d_q = 1;
    long dim = 0;
    long ord_p = 1;
    std::optional<long> residue;
    std::vector<ClosedFormTerm> terms;
    std::string source;
    long digits = 64;
    /// Recomputes the numeric terms at another precision; set when the
    /// constants are transcendental.
    std::function<std::vector<ClosedFormTerm>(long digits)> rebuild;

    /// "rational", "quadratic-surd(k)" or "high-precision-complex".
    std::string field() const {
        Integer k = 1;
        for (const auto& t : terms)
            for (const Scalar* s : {&t.weight, &t.base}) {
                if (!is_exact(*s)) return "high-precision-complex";
                const auto& q = std::get<QuadSurd>(*s);
                if (!q.is_rational()) {
                    if (k != 1 && k != q.radicand()) return "high-precision-complex";
                    k = q.radicand();
                }
            }
        return k == 1 ? "rational" : "quadratic-surd(" + k.get_str() + ")";
    }
};

struct FormulaValue {
    std::optional<Rational> exact;
    Complex numeric;
    Integer rounded;
    /// |numeric - rounded|
    BigFloat distance;
    long digits = 64;
};

inline mpfr_prec_t working_bits(long digits) { return digits_to_bits(digits + 20); }

/// Requires the dimension constraint, residue and parity conditions to hold.
inline void check_admissible(const ClosedForm& f, long g, long d, long n) {
    if (g < 0 || d < 0 || n < 0) throw ConstraintError("g, d and n must be non-negative");
    if (f.d_q * d != f.dim * (n + g - 1))
        throw ConstraintError("dimension constraint " + std::to_string(f.d_q) + " d = " + std::to_string(f.dim) +
                              " (n + g - 1) fails");
    if (f.residue && floor_mod(n + g, f.ord_p) != *f.residue)
        throw ConstraintError("n + g is not " + std::to_string(*f.residue) + " mod " + std::to_string(f.ord_p));
    for (const auto& t : f.terms)
        if (t.parity == Parity::PowHalfD && d % 2 != 0) throw ConstraintError("(-1)^(d/2) form needs d even");
}

inline int parity_sign(Parity p, long d) {
    switch (p) {
    case Parity::None: return 1;
    case Parity::PowD: return d % 2 == 0 ? 1 : -1;
    case Parity::PowHalfD: return (d / 2) % 2 == 0 ? 1 : -1;
    }
    return 1;
}

inline FormulaValue evaluate_formula(const ClosedForm& f, long g, long d, long n) {
    check_admissible(f, g, d, n);
    // numeric terms: carry enough digits that the absolute error stays below
    // 10^-digits even when base^g is large
    long extra = 0;
    for (const auto& t : f.terms)
        if (!is_exact(t.base)) {
            double mag = std::sqrt(std::get<Complex>(t.base).norm2().to_double());
            if (mag > 1) extra = std::max(extra, static_cast<long>(std::ceil(static_cast<double>(g) * std::log10(mag))) + 1);
        }
    const long eff = f.digits + extra;
    std::vector<ClosedFormTerm> rebuilt;
    if (extra > 0 && f.rebuild) rebuilt = f.rebuild(eff);
    const auto& terms = rebuilt.empty() ? f.terms : rebuilt;
    const mpfr_prec_t bits = working_bits(eff);
    FormulaValue out;
    out.digits = f.digits;
    out.numeric = Complex(bits);
    out.numeric.re = BigFloat(0L, bits);
    out.numeric.im = BigFloat(0L, bits);

    bool exact = true;
    std::map<Integer, QuadSurd> by_field;
    for (const auto& t : terms) {
        const int sgn_d = parity_sign(t.parity, d);
        if (is_exact(t.weight) && is_exact(t.base)) {
            const auto& w = std::get<QuadSurd>(t.weight);
            QuadSurd v = w * pow(std::get<QuadSurd>(t.base), static_cast<unsigned long>(g)) * QuadSurd(sgn_d);
            by_field[v.radicand()] += v;
        } else {
            exact = false;
        }
        Complex v = to_complex(t.weight, bits) * pow(to_complex(t.base, bits), static_cast<unsigned long>(g));
        if (sgn_d < 0) v = Complex{-v.re, -v.im};
        out.numeric = out.numeric + v;
    }
    if (exact) {
        Rational total = 0;
        for (const auto& [k, v] : by_field) {
            if (!v.is_rational()) {
                exact = false;
                break;
            }
            total += v.rational();
        }
        if (exact) {
            out.exact = total;
            out.numeric = {BigFloat(total, bits), BigFloat(0L, bits)};
        }
    }
    out.rounded = out.numeric.re.round();
    out.distance = abs(out.numeric.re - BigFloat(out.rounded, bits));
    return out;
}

} // namespace tevelev
