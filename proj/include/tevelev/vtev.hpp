#pragma once

#include <optional>
#include <vector>

#include "complete_intersection.hpp"
#include "grassmann.hpp"
#include "power_ring.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace tevelev {

inline RingPtr make_ring(const RingDescriptor& d) {
    if (d.kind == RingKind::Grassmannian) return grassmannian(d.gr_m, d.gr_N);
    return power_ring(d);
}

/// The quantum Euler class E.
inline QHElement euler_class(const RingDescriptor& d) {
    switch (d.kind) {
    case RingKind::Grassmannian: return euler_class_grassmann(grassmannian(d.gr_m, d.gr_N));
    case RingKind::Projective: return QHElement::basis(power_ring(d), PowerIndex{d.dim_r}, 0, Rational(d.dim_r + 1));
    case RingKind::CompleteIntersection: return ci_ring(d)->euler_expansion();
    }
    throw InvalidArgument("unknown ring kind");
}

/// The point class P.
inline QHElement point_class(const RingDescriptor& d) {
    switch (d.kind) {
    case RingKind::Grassmannian: return point_class(grassmannian(d.gr_m, d.gr_N));
    case RingKind::Projective: return QHElement::basis(power_ring(d), PowerIndex{d.dim_r});
    case RingKind::CompleteIntersection: return ci_ring(d)->point_class();
    }
    throw InvalidArgument("unknown ring kind");
}

/// Coefficient of q^d P in x. For complete intersections this is m^1 times
/// the coefficient of q^d H^{*r}.
inline Rational point_coefficient(const RingDescriptor& d, const QHElement& x, long qpow) {
    const Ring& R = x.ring();
    Rational c = x.coeff(R.top_label(), qpow);
    if (d.kind == RingKind::CompleteIntersection) c *= mvec_pow(d.m_vector, 0, 1);
    return c;
}

/// Non-negative integer d with d_q d = r (n + g - 1), if any.
inline std::optional<long> dimension_constraint(const RingDescriptor& d, long g, long n) {
    long num = static_cast<long>(d.dim_r) * (n + g - 1);
    if (num < 0 || num % d.fano_index != 0) return std::nullopt;
    return num / d.fano_index;
}

/// Non-negative integer n with d_q d = r (n + g - 1), if any.
inline std::optional<long> solve_n(const RingDescriptor& desc, long g, long d) {
    long num = static_cast<long>(desc.fano_index) * d;
    if (d < 0 || num % desc.dim_r != 0) return std::nullopt;
    long n = num / desc.dim_r - g + 1;
    if (n < 0) return std::nullopt;
    return n;
}

struct VtevResult {
    std::optional<long> d;
    Rational value;
};

/// P^n * x. Grassmannians shift term by term via Seidel translation.
inline QHElement multiply_point_power(const RingDescriptor& d, const QHElement& x, long n) {
    if (d.kind == RingKind::Grassmannian) {
        const auto& R = dynamic_cast<const GrassmannianRing&>(x.ring());
        QHElement out(x.ring_ptr());
        for (const auto& [lab, p] : x.terms()) {
            Monomial mo = seidel_multiply(R, {0, std::get<Partition>(lab)}, n * (R.N() - R.m()));
            out.add_term(mo.shape, p.shifted(mo.qpow));
        }
        return out;
    }
    return pow(point_class(d), static_cast<unsigned long>(n)) * x;
}

inline QHElement tevelev_product(const RingDescriptor& d, long g, long n) {
    return multiply_point_power(d, pow(euler_class(d), static_cast<unsigned long>(g)), n);
}

/// coeff(P^n * E^g, q^d P) with d from the dimension constraint; 0 when none.
inline VtevResult vtev(const RingDescriptor& desc, long g, long n) {
    if (g < 0 || n < 0) throw InvalidArgument("g and n must be non-negative");
    VtevResult res;
    res.d = dimension_constraint(desc, g, n);
    if (!res.d) {
        res.value = 0;
        return res;
    }
    res.value = point_coefficient(desc, tevelev_product(desc, g, n), *res.d);
    return res;
}

/// Entry point by (g, d): solves for n; value 0 and n absent when impossible.
struct VtevByDegree {
    std::optional<long> n;
    Rational value;
};

inline VtevByDegree vtev_by_degree(const RingDescriptor& desc, long g, long d) {
    VtevByDegree res;
    res.n = solve_n(desc, g, d);
    if (res.n) res.value = vtev(desc, g, *res.n).value;
    return res;
}

/// Values for g + n <= 1; nullopt otherwise.
inline std::optional<Rational> vtev_base_cases(const RingDescriptor& desc, long g, long n, long d) {
    if (g + n >= 2) return std::nullopt;
    if (g == 0 && n == 0) return Rational(0);
    if (g == 0) return Rational(d == 0 ? 1 : 0);
    return d == 0 ? Rational(desc.euler_char) : Rational(0);
}

/// Product rule: the product of the per-factor values at common (g, n).
inline Rational vtev_product(const std::vector<RingDescriptor>& factors, long g, long n) {
    Rational out = 1;
    for (const auto& f : factors) {
        VtevResult r = vtev(f, g, n);
        if (!r.d) return 0;
        out *= r.value;
    }
    return out;
}

/// Product rule with prescribed per-factor degrees.
inline Rational vtev_product(const std::vector<std::pair<RingDescriptor, long>>& factors, long g, long n) {
    Rational out = 1;
    for (const auto& [f, d] : factors) {
        auto dd = dimension_constraint(f, g, n);
        if (!dd || *dd != d) return 0;
        out *= vtev(f, g, n).value;
    }
    return out;
}

} // namespace tevelev
