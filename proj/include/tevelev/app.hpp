#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "grassmann.hpp"
#include "space.hpp"
#include "spectral.hpp"
#include "vtev.hpp"

namespace tevelev {

/// ord(P) where it is known: P^r, Gr(m,N) and quadrics.
inline std::optional<long> point_order(const RingDescriptor& d) {
    switch (d.kind) {
    case RingKind::Projective: return d.dim_r + 1;
    case RingKind::Grassmannian: return d.gr_N / std::gcd(d.gr_m, d.gr_N);
    case RingKind::CompleteIntersection:
        if (d.m_vector == std::vector<int>{2}) return 2;
        return std::nullopt;
    }
    return std::nullopt;
}

/// Constraint data d_q d = dim (n + g - 1), and ord(P) when known.
struct SpaceConstraint {
    long d_q = 1;
    long dim = 0;
    std::optional<long> ord_p;
};

inline ClosedForm require_catalog(const SpaceSpec& sp, long digits) {
    auto f = catalog_formula(sp.tag, digits);
    if (!f) throw OutOfRange("no catalog formula for " + sp.tag);
    return *f;
}

inline SpaceConstraint space_constraint(const SpaceSpec& sp) {
    if (sp.ring) return {sp.ring->fano_index, sp.ring->dim_r, point_order(*sp.ring)};
    if (sp.is_product()) throw InvalidArgument("a product has one constraint per factor");
    ClosedForm f = require_catalog(sp, 16);
    return {f.d_q, f.dim, f.ord_p};
}

inline std::optional<long> constraint_degree(const SpaceConstraint& c, long g, long n) {
    long num = c.dim * (n + g - 1);
    if (n < 0 || num < 0 || num % c.d_q != 0) return std::nullopt;
    return num / c.d_q;
}

inline bool isone(const SpaceConstraint& c) { return c.ord_p && isone_predicate(c.d_q, c.dim, *c.ord_p); }

/// A computed value: exact when possible, otherwise the rounded integer
/// with the raw decimal alongside.
struct SpaceValue {
    std::optional<Rational> exact;
    Integer rounded;
    std::optional<std::string> raw;

    std::string text() const { return exact ? to_string(*exact) : rounded.get_str(); }

    static SpaceValue of(const Rational& q) {
        SpaceValue v;
        v.exact = q;
        mpz_fdiv_q(v.rounded.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return v;
    }
};

inline SpaceValue formula_value(const SpaceSpec& sp, long g, long d, long n, long digits) {
    FormulaValue v = evaluate_checked(sp.tag, g, d, n, digits);
    SpaceValue out;
    out.rounded = v.rounded;
    if (v.exact) {
        out.exact = v.exact;
        return out;
    }
    if (v.distance > BigFloat::pow2(-33, 64)) throw NumericalFailure("closed form value is not within 1e-10 of an integer");
    out.raw = v.numeric.re.to_string(digits);
    return out;
}

struct VtevAnswer {
    long g = 0;
    std::optional<long> n;
    std::vector<long> d;
    SpaceValue value;
    std::optional<std::string> reason;
    std::string method;
};

inline VtevAnswer unsatisfiable(long g, std::optional<long> n) {
    VtevAnswer a;
    a.g = g;
    a.n = n;
    a.value = SpaceValue::of(0);
    a.reason = "dimension constraint unsatisfiable";
    return a;
}

/// vTev for any parsed space. Exactly one of n, d may be absent; when both
/// are given they must agree with the constraint, otherwise the value is 0.
inline VtevAnswer space_vtev(const SpaceSpec& sp, long g, std::optional<long> n, std::optional<long> d, long digits = 64) {
    if (g < 0) throw InvalidArgument("genus must be non-negative");
    if (!n && !d) throw InvalidArgument("give --n or --d");
    if (sp.is_product()) {
        if (!n) throw InvalidArgument("products need --n");
        VtevAnswer a;
        a.g = g;
        a.n = n;
        a.method = "product";
        Rational prod = 1;
        for (const auto& f : sp.factors) {
            VtevAnswer fa = space_vtev(f, g, n, std::nullopt, digits);
            if (fa.reason) return unsatisfiable(g, n);
            if (!fa.value.exact) throw OutOfRange("products of numeric closed forms are not supported");
            prod *= *fa.value.exact;
            a.d.insert(a.d.end(), fa.d.begin(), fa.d.end());
        }
        a.value = SpaceValue::of(prod);
        return a;
    }
    SpaceConstraint c = space_constraint(sp);
    if (!n) {
        long num = c.d_q * *d;
        if (*d < 0 || num % c.dim != 0 || num / c.dim - g + 1 < 0) return unsatisfiable(g, n);
        n = num / c.dim - g + 1;
    }
    auto dd = constraint_degree(c, g, *n);
    if (!dd || (d && *d != *dd)) return unsatisfiable(g, n);
    VtevAnswer a;
    a.g = g;
    a.n = n;
    a.d = {*dd};
    if (sp.ring) {
        a.method = "engine";
        a.value = SpaceValue::of(vtev(*sp.ring, g, *n).value);
    } else {
        a.method = "catalog";
        try {
            a.value = formula_value(sp, g, *dd, *n, digits);
        } catch (const ConstraintError& e) {
            VtevAnswer u = unsatisfiable(g, n);
            u.reason = e.what();
            return u;
        }
    }
    return a;
}

struct TableCell {
    long n = 0;
    std::vector<long> d;
    SpaceValue value;
};

struct TableResult {
    /// One column group per residue of n + g mod ord(P); a single group
    /// (nullopt) when the values depend on g only.
    std::vector<std::optional<long>> residues;
    std::optional<long> ord_p;
    struct Row {
        long g = 0;
        std::vector<std::optional<TableCell>> cells;
    };
    std::vector<Row> rows;
};

namespace detail {

/// Least n >= 0 meeting every constraint, with n + g = residue mod ord when asked.
inline std::optional<long> least_n(const std::vector<SpaceConstraint>& cs, long g, std::optional<long> residue, long ord) {
    long bound = g + 2;
    for (const auto& c : cs) bound *= (c.d_q + 1);
    bound = std::min(bound, g + 100000L);
    for (long n = 0; n <= bound; ++n) {
        if (residue && floor_mod(n + g, ord) != *residue) continue;
        bool ok = true;
        for (const auto& c : cs) ok = ok && constraint_degree(c, g, n).has_value();
        if (ok) return n;
    }
    return std::nullopt;
}

} // namespace detail

/// Rows g = 0..gmax. Ring spaces run through the engine with E^g built
/// incrementally; formula-only spaces use the catalog.
inline TableResult space_table(const SpaceSpec& sp, long gmax, long digits = 64) {
    if (gmax < 0) throw InvalidArgument("gmax must be non-negative");
    TableResult t;
    std::vector<SpaceConstraint> cs;
    if (sp.is_product())
        for (const auto& f : sp.factors) cs.push_back(space_constraint(f));
    else
        cs.push_back(space_constraint(sp));
    long ord = 1;
    if (!sp.is_product() && cs[0].ord_p && !isone(cs[0])) {
        ord = *cs[0].ord_p;
        t.ord_p = ord;
        for (long res = 0; res < ord; ++res)
            for (long s = res == 0 ? ord : res; s <= res + ord * cs[0].d_q; s += ord)
                if (cs[0].dim * (s - 1) % cs[0].d_q == 0) {
                    t.residues.emplace_back(res);
                    break;
                }
    } else {
        t.residues.emplace_back(std::nullopt);
    }

    std::optional<QHElement> E, Eg;
    if (sp.ring) {
        E = euler_class(*sp.ring);
        Eg = QHElement::one(E->ring_ptr());
    }
    for (long g = 0; g <= gmax; ++g) {
        if (g > 0 && Eg) *Eg = *Eg * *E;
        TableResult::Row row;
        row.g = g;
        for (const auto& res : t.residues) {
            auto n = detail::least_n(cs, g, res, ord);
            if (!n) {
                row.cells.emplace_back(std::nullopt);
                continue;
            }
            TableCell cell;
            cell.n = *n;
            if (sp.ring) {
                long d = *constraint_degree(cs[0], g, *n);
                cell.d = {d};
                cell.value = SpaceValue::of(point_coefficient(*sp.ring, multiply_point_power(*sp.ring, *Eg, *n), d));
            } else {
                VtevAnswer a = space_vtev(sp, g, n, std::nullopt, digits);
                cell.d = a.d;
                cell.value = a.value;
            }
            row.cells.emplace_back(std::move(cell));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Closed forms for a space: synthesized for Grassmannians and P^r, taken
/// from the catalog otherwise. One form per admissible residue when the
/// values depend on n mod ord(P).
struct ClosedFormReport {
    std::vector<ClosedForm> forms;
    bool isone = true;
    std::string source;
};

inline ClosedFormReport space_closed_forms(const SpaceSpec& sp, long digits = 64) {
    ClosedFormReport rep;
    if (sp.ring && (sp.ring->kind == RingKind::Grassmannian || sp.ring->kind == RingKind::Projective)) {
        const int m = sp.ring->kind == RingKind::Grassmannian ? sp.ring->gr_m : 1;
        const int N = sp.ring->kind == RingKind::Grassmannian ? sp.ring->gr_N : sp.ring->dim_r + 1;
        auto R = grassmannian(m, N);
        SpectralData s = spectral_data(R, digits);
        rep.source = "spectral";
        rep.isone = isone_predicate(*R);
        auto residues = admissible_residues(*R);
        if (rep.isone) residues.resize(1);
        for (long res : residues) rep.forms.push_back(synthesize_closed_form(s, res, sp.tag));
        return rep;
    }
    if (sp.is_product()) throw OutOfRange("closed forms of products are not implemented");
    auto f = catalog_formula(sp.tag, digits);
    if (!f) throw OutOfRange("no closed form for " + sp.tag + ": not a Grassmannian and not in the catalog");
    rep.source = "catalog";
    rep.isone = isone_predicate(f->d_q, f->dim, f->ord_p);
    rep.forms.push_back(*f);
    return rep;
}

} // namespace tevelev
