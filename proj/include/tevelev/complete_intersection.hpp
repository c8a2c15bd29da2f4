#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "power_ring.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace tevelev {

/// Coefficients of prod_i prod_{j=0..m_i} (j H1 + (m_i - j) H2), keyed by the H1 degree.
inline std::map<int, Integer> psi_coefficients(const std::vector<int>& m) {
    std::vector<Integer> poly{1}; // index = H1 degree
    for (int mi : m) {
        if (mi < 1) throw InvalidArgument("degrees must be positive");
        for (int j = 0; j <= mi; ++j) {
            std::vector<Integer> next(poly.size() + 1, Integer(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k] * j;
                next[k] += poly[k] * (mi - j);
            }
            poly = std::move(next);
        }
    }
    std::map<int, Integer> out;
    for (std::size_t k = 0; k < poly.size(); ++k)
        if (poly[k] != 0) out.emplace(static_cast<int>(k), poly[k]);
    return out;
}

/// c_i = m^{-1} coeff(Psi_m, H1^i H2^{L+|m|-i}); zero outside L..|m|.
inline std::map<int, Rational> ci_constants(const std::vector<int>& m) {
    Rational inv = mvec_pow(m, 0, -1);
    std::map<int, Rational> out;
    for (const auto& [k, c] : psi_coefficients(m)) out.emplace(k, Rational(c) * inv);
    return out;
}

/// Restricted quantum ring of a complete intersection with its classical
/// hyperplane powers h_i = H^i written in the power basis.
class CiRing {
public:
    explicit CiRing(const RingDescriptor& d) : desc_(d) {
        if (d.kind != RingKind::CompleteIntersection) throw InvalidArgument("not a complete intersection");
        ring_ = power_ring(d);
        const int r = d.dim_r, L = d.L, sum = d.degree_sum();
        index_ = d.fano_index;
        c_ = ci_constants(d.m_vector);
        border_ = (r == 2 * sum - 2 * L - 2);
        if (border_) {
            Rational mf(mvec_factorial(d.m_vector));
            border_delta_ = mf * (mf + 2 * c(L + 1)) / 4;
        }
        QHElement H = QHElement::basis(ring_, PowerIndex{1});
        h_.push_back(QHElement::one(ring_));
        for (int i = 0; i < r; ++i) {
            QHElement next = H * h_.back();
            next -= pieri_correction(i);
            h_.push_back(std::move(next));
        }
        // Row r, determined by the relation: H * h_r re-expanded in the h basis.
        pieri_.resize(static_cast<std::size_t>(r + 1));
        for (int i = 0; i < r; ++i) pieri_[static_cast<std::size_t>(i)] = classical_expand(H * h_[static_cast<std::size_t>(i)]);
        pieri_[static_cast<std::size_t>(r)] = classical_expand(H * h_[static_cast<std::size_t>(r)]);
    }

    const RingDescriptor& descriptor() const { return desc_; }
    const PowerRingPtr& ring() const { return ring_; }
    int r() const { return desc_.dim_r; }
    int index() const { return index_; }
    int i0() const { return r() / index_; }
    bool border() const { return border_; }
    Rational c(int i) const {
        auto it = c_.find(i);
        return it == c_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& constants() const { return c_; }

    /// <H^{r-1}, P>_{0,2} in the border case.
    const Rational& border_delta() const { return border_delta_; }

    /// Classical power h_i = H^i in the power basis.
    const QHElement& classical_power(int i) const { return h_.at(static_cast<std::size_t>(i)); }

    /// H * h_i expanded in the classical basis: map j -> Laurent coefficient of h_j.
    const std::map<int, LaurentPoly>& pieri_row(int i) const { return pieri_.at(static_cast<std::size_t>(i)); }

    /// Homogeneous element rewritten in the classical basis h_j.
    std::map<int, LaurentPoly> classical_expand(QHElement x) const {
        std::map<int, LaurentPoly> out;
        while (!x.is_zero()) {
            const auto& [lab, p] = *x.terms().rbegin();
            int k = std::get<PowerIndex>(lab).i;
            LaurentPoly coef = p;
            out[k] += coef;
            // subtract coef * h_k
            QHElement sub(ring_);
            for (const auto& [l2, p2] : h_[static_cast<std::size_t>(k)].terms()) sub.add_term(l2, p2 * coef);
            x -= sub;
        }
        return out;
    }

    /// P = m^{-1} h_r.
    QHElement point_class() const { return h_.back() * mvec_pow(desc_.m_vector, 0, -1); }

    /// E = chi m^{-1} H^{*r} + (index - chi) m^{m-1} q H^{*(|m|-L-1)}.
    QHElement euler_expansion() const {
        const auto& m = desc_.m_vector;
        Rational chi(desc_.euler_char);
        QHElement E = QHElement::basis(ring_, PowerIndex{r()}, 0, chi * mvec_pow(m, 0, -1));
        int s = desc_.degree_sum() - desc_.L - 1;
        Rational second = (Rational(index_) - chi) * mvec_pow(m, 1, -1);
        if (s >= 0 && second != 0) E += QHElement::basis(ring_, PowerIndex{s}, 1, second);
        return E;
    }

    /// E assembled from dual bases: sum of m^{-1} h_{r-i} * h_i over the
    /// restricted part, plus each primitive class contributing the element
    /// killed by H that reduces to P mod q.
    QHElement euler_from_dual_bases() const {
        const auto& m = desc_.m_vector;
        Rational inv = mvec_pow(m, 0, -1);
        QHElement E(ring_);
        for (int i = 0; i <= r(); ++i)
            E += h_[static_cast<std::size_t>(r() - i)] * h_[static_cast<std::size_t>(i)] * inv;
        Rational extra = Rational(desc_.euler_char) - (r() + 1);
        if (extra != 0) {
            QHElement Z = QHElement::basis(ring_, PowerIndex{r()}, 0, inv);
            int s = desc_.degree_sum() - desc_.L - 1;
            if (s >= 0) Z -= QHElement::basis(ring_, PowerIndex{s}, 1, mvec_pow(m, 1, -1));
            E += Z * extra;
        }
        return E;
    }

    /// Coefficients P_0..P_{i0} of P = sum P_i q^i H^{*(r - i index)}.
    std::vector<Rational> point_expansion() const {
        QHElement P = point_class();
        std::vector<Rational> out;
        for (int i = 0; i <= i0(); ++i) out.push_back(P.coeff(PowerIndex{r() - i * index_}, i));
        return out;
    }

private:
    /// Quantum corrections of H * h_i beyond h_{i+1}, in the power basis.
    QHElement pieri_correction(int i) const {
        const int r = desc_.dim_r, L = desc_.L, sum = desc_.degree_sum();
        QHElement out(ring_);
        int j = i - r - L + sum;
        Rational cc = c(i - r + sum);
        if (j >= 0 && cc != 0) {
            for (const auto& [l, p] : h_[static_cast<std::size_t>(j)].terms()) out.add_term(l, p.shifted(1) * cc);
        }
        if (border_ && i == r - 1) out += QHElement::q_power(ring_, 2, 2 * border_delta_);
        return out;
    }

    RingDescriptor desc_;
    PowerRingPtr ring_;
    int index_ = 0;
    std::map<int, Rational> c_;
    bool border_ = false;
    Rational border_delta_ = 0;
    std::vector<QHElement> h_;
    std::vector<std::map<int, LaurentPoly>> pieri_;
};

using CiRingPtr = std::shared_ptr<const CiRing>;

inline CiRingPtr ci_ring(const RingDescriptor& d) {
    static std::mutex mu;
    static std::map<std::string, CiRingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d.name()];
    if (!slot) slot = std::make_shared<const CiRing>(d);
    return slot;
}

inline CiRingPtr build_ring(int r, const std::vector<int>& m) {
    return ci_ring(RingDescriptor::complete_intersection(r, m));
}

/// b_i decomposition of P^n * E^g and its discrepancy.
struct DiscrepancyReport {
    long d = 0;
    std::vector<Rational> b;
    QHElement noncontrib;
    Rational disc;
};

inline std::optional<long> ci_degree(const CiRing& R, long g, long n) {
    long num = static_cast<long>(R.r()) * (n + g - 1);
    if (num < 0 || num % R.index() != 0) return std::nullopt;
    return num / R.index();
}

inline DiscrepancyReport discrepancy(const CiRing& R, long g, long n) {
    auto d = ci_degree(R, g, n);
    if (!d) throw ConstraintError("dimension constraint has no non-negative integer solution");
    QHElement X = pow(R.point_class(), static_cast<unsigned long>(n)) *
                  pow(R.euler_expansion(), static_cast<unsigned long>(g));
    DiscrepancyReport rep{*d, {}, QHElement(R.ring()), 0};
    const auto& m = R.descriptor().m_vector;
    for (int i = 0; i <= R.i0(); ++i) {
        Rational bi = X.coeff(PowerIndex{R.r() - i * R.index()}, *d + i);
        rep.b.push_back(bi);
        if (i >= 1) {
            rep.disc += bi * mvec_pow(m, -i, 1);
            if (bi != 0) rep.noncontrib += QHElement::basis(R.ring(), PowerIndex{R.r() - i * R.index()}, *d + i, bi);
        }
    }
    return rep;
}

/// vTev = m^1 b_0.
inline Rational vtev_ci(const CiRing& R, long g, long n) {
    auto d = ci_degree(R, g, n);
    if (!d) return 0;
    QHElement X = pow(R.point_class(), static_cast<unsigned long>(n)) *
                  pow(R.euler_expansion(), static_cast<unsigned long>(g));
    return mvec_pow(R.descriptor().m_vector, 0, 1) * X.coeff(PowerIndex{R.r()}, *d);
}

/// ((m-1)!)^n index^g m^{(d-n)m - g + 1}.
inline Rational ccii_formula(const CiRing& R, long g, long d, long n) {
    const auto& D = R.descriptor();
    if (!(D.degree_sum() > D.L + 1) || !(D.dim_r > 2 * D.degree_sum() - 2 * D.L - 2))
        throw OutOfRange("closed form needs |m| > L+1 and r > 2|m|-2L-2");
    if (g + n < 2) throw OutOfRange("closed form needs g + n >= 2");
    if (g < 0 || n < 0 || d < 0 || R.index() * d != R.r() * (n + g - 1))
        throw ConstraintError("dimension constraint fails");
    return rpow(Rational(mvec_factorial(D.m_vector, -1)), n) * rpow(Rational(R.index()), g) *
           mvec_pow(D.m_vector, d - n, -g + 1);
}

/// The border-case closed form with its three-branch discrepancy.
inline Rational border_formula(const CiRing& R, long g, long d, long n) {
    const auto& D = R.descriptor();
    if (!R.border()) throw OutOfRange("border formula needs r = 2|m|-2L-2");
    if (g < 0 || n < 0 || d != 2 * (n + g - 1)) throw ConstraintError("border case needs d = 2(n+g-1)");
    const auto& m = D.m_vector;
    Rational mf(mvec_factorial(m));
    Rational mm = mvec_pow(m, 1, 0);
    Rational s(D.degree_sum() - D.L - 1);
    Rational main = rpow(mf * mm - mf * mf / 2, n) * rpow(s, g) * mvec_pow(m, 2 * g - 2, -n - g + 1);
    Rational base = -mf * mf * mvec_pow(m, 0, -1) / 2;
    Rational disc = 0;
    if (g == 0) {
        if (n == 0) throw ConstraintError("border case needs n + g >= 1");
        disc = rpow(base, n - 1) * (Rational(n) * mf * mvec_pow(m, -1, 0) - n - mvec_pow(m, -2, 0) * mf * mf / 2);
    } else if (g == 1) {
        disc = rpow(base, n) * (s - Rational(D.euler_char));
    }
    return main - disc;
}

/// (sum_i P_i m^{-i m})^n index^g m^{d m - g + 1} - Disc.
inline Rational tevdeg2_formula(const CiRing& R, long g, long n) {
    DiscrepancyReport rep = discrepancy(R, g, n);
    const auto& m = R.descriptor().m_vector;
    Rational sp = 0;
    auto P = R.point_expansion();
    for (std::size_t i = 0; i < P.size(); ++i) sp += P[i] * mvec_pow(m, -static_cast<long>(i), 0);
    return rpow(sp, n) * rpow(Rational(R.index()), g) * mvec_pow(m, rep.d, -g + 1) - rep.disc;
}

} // namespace tevelev
