#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace tevelev {

/// Dense univariate polynomial over Q, coefficients low to high.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    Poly(const Rational& constant) : c_{constant} { trim(); } // NOLINT(google-explicit-constructor)

    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    static Poly linear(const Rational& root) { return Poly({Rational(-root), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational operator[](int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    BigFloat eval(const BigFloat& x) const {
        BigFloat acc(0L, x.precision());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigFloat(*it, x.precision());
        return acc;
    }

    Poly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly p = *this;
        Rational l = lead();
        for (auto& v : p.c_) v /= l;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) {
        Poly p = a;
        for (auto& v : p.c_) v = -v;
        return p;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
        std::vector<Rational> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
        for (int i = a.degree(); i >= db; --i) {
            Rational f = r[static_cast<std::size_t>(i)] / b.lead();
            q[static_cast<std::size_t>(i - db)] = f;
            if (f == 0) continue;
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(db));
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    /// "x^2 - 25*x + 125"
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            Rational c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty()) out += tevelev::to_string(a);
            else if (a == 1) out += mono;
            else out += (is_integer(a) ? tevelev::to_string(a) : "(" + tevelev::to_string(a) + ")") + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's algorithm: factors f_1, f_2, ... with p = lead * prod f_i^i, each f_i
/// monic and squarefree. Trailing unit factors are dropped.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.monic();
    Poly a = gcd(f, f.derivative());
    Poly b = f / a;
    Poly c = f.derivative() / a;
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() >= 1; ++i) {
        Poly g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    return out;
}

/// Sturm sequence p, p', -rem(p_{i-1}, p_i), ...
inline std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        Poly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        seq.push_back(r);
    }
    return seq;
}

inline int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& s : seq) {
        int v = sgn(s.eval(x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

/// Cauchy bound: every root has |x| <= bound.
inline Rational root_bound(const Poly& p) {
    Rational b = 0;
    for (int i = 0; i < p.degree(); ++i) b = std::max(b, Rational(abs(p[i] / p.lead())));
    return b + 1;
}

/// Number of distinct real roots in (a, b].
inline int count_real_roots(const std::vector<Poly>& seq, const Rational& a, const Rational& b) {
    return sign_changes(seq, a) - sign_changes(seq, b);
}

inline int count_real_roots(const Poly& p) {
    auto seq = sturm_sequence(p);
    Rational B = root_bound(p);
    return count_real_roots(seq, -B, B);
}

/// Disjoint intervals (a, b], each holding exactly one real root of the
/// squarefree polynomial p, in increasing order.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() < 1) return out;
    auto seq = sturm_sequence(p);
    Rational B = root_bound(p);
    std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int k = count_real_roots(seq, a, b);
        if (k == 0) continue;
        if (k == 1) {
            out.emplace_back(a, b);
            continue;
        }
        Rational mid = (a + b) / 2;
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Bisects an isolating interval until its width is below 2^-bits, then
/// returns the midpoint.
inline BigFloat refine_root(const Poly& p, Rational a, Rational b, mpfr_prec_t bits) {
    if (p.eval(b) == 0) return BigFloat(b, bits);
    Rational eps = make_rational(1, Integer(1) << static_cast<unsigned long>(bits + 4));
    int sa = sgn(p.eval(a));
    // a may be the root of the neighbouring interval; just right of a simple root p has the sign of p'
    if (sa == 0) sa = sgn(p.derivative().eval(a));
    while (b - a > eps) {
        Rational mid = (a + b) / 2;
        int sm = sgn(p.eval(mid));
        if (sm == 0) return BigFloat(mid, bits);
        if (sm == sa) a = mid;
        else b = mid;
    }
    return BigFloat(Rational((a + b) / 2), bits);
}

/// Factorization of a monic integer squarefree polynomial into irreducible
/// factors over Q, assuming all roots are real. Roots are located numerically
/// and grouped by trying subset products whose coefficients round to
/// integers; every candidate is confirmed by exact division.
inline std::vector<Poly> factor_real_rooted(const Poly& p, mpfr_prec_t bits = 512) {
    std::vector<Poly> out;
    Poly rest = p.monic();
    if (rest.degree() < 1) return out;
    if (count_real_roots(rest) != rest.degree()) throw NumericalFailure("polynomial has non-real roots");
    std::vector<BigFloat> roots;
    for (auto [a, b] : isolate_real_roots(rest)) roots.push_back(refine_root(rest, a, b, bits));

    const BigFloat tol = BigFloat::pow2(-static_cast<long>(bits / 2), bits);
    for (int k = 1; 2 * k <= rest.degree();) {
        bool found = false;
        const int n = static_cast<int>(roots.size());
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (!found) {
            // coefficients of prod (x - r_i)
            std::vector<BigFloat> c{BigFloat(1L, bits)};
            for (int i : idx) {
                std::vector<BigFloat> nc(c.size() + 1, BigFloat(0L, bits));
                for (std::size_t j = 0; j < c.size(); ++j) {
                    nc[j + 1] += c[j];
                    nc[j] -= c[j] * roots[static_cast<std::size_t>(i)];
                }
                c = std::move(nc);
            }
            std::vector<Rational> ic;
            bool integral = true;
            for (const auto& v : c) {
                Integer r = v.round();
                if (abs(v - BigFloat(r, bits)) > tol) {
                    integral = false;
                    break;
                }
                ic.emplace_back(r);
            }
            if (integral) {
                Poly cand(ic);
                auto [q, r] = divmod(rest, cand);
                if (r.is_zero()) {
                    out.push_back(cand);
                    rest = q;
                    for (int j = k - 1; j >= 0; --j) roots.erase(roots.begin() + idx[static_cast<std::size_t>(j)]);
                    found = true;
                    break;
                }
            }
            // next k-subset of [0, n)
            int j = k - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int t = j + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
        if (!found) ++k;
    }
    if (rest.degree() >= 1) out.push_back(rest);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    return out;
}

} // namespace tevelev
