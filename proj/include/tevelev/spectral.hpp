#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bigfloat.hpp"
#include "closed_form.hpp"
#include "errors.hpp"
#include "grassmann.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "surd.hpp"

namespace tevelev {

/// The monomials q^(-|lambda|/N) [X^lambda] with N | |lambda|, unit first.
struct DegreeZeroBasis {
    GrassmannianPtr ring;
    std::vector<Monomial> labels;

    std::size_t size() const { return labels.size(); }

    std::optional<std::size_t> index_of(const Monomial& mo) const {
        auto it = std::find(labels.begin(), labels.end(), mo);
        if (it == labels.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels.begin());
    }

    /// Coordinates of a degree-0 element; throws if x leaves the span.
    Vec<Rational> coordinates(const QHElement& x) const {
        Vec<Rational> v(labels.size());
        for (const auto& [lab, p] : x.terms())
            for (const auto& [e, c] : p.terms()) {
                auto i = index_of({e, std::get<Partition>(lab)});
                if (!i) throw InvalidArgument("element has a component outside degree 0");
                v[*i] = c;
            }
        return v;
    }

    QHElement element(const Vec<Rational>& v) const {
        QHElement x(ring);
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (v[i] != 0) x.add_term(labels[i].shape, LaurentPoly::monomial(labels[i].qpow, v[i]));
        return x;
    }
};

inline DegreeZeroBasis degree_zero_basis(const GrassmannianPtr& R) {
    DegreeZeroBasis B;
    B.ring = R;
    for (const auto& l : R->basis()) {
        const auto& p = std::get<Partition>(l);
        if (p.size() % R->N() == 0) B.labels.push_back({-static_cast<long>(p.size() / R->N()), p});
    }
    return B;
}

inline const GrassmannianRing& as_grassmannian(const QHElement& x) {
    const auto* g = dynamic_cast<const GrassmannianRing*>(&x.ring());
    if (!g) throw InvalidArgument("strange duality is implemented for Grassmannians only");
    return *g;
}

/// x * [X^(1^m)]^k, term by term.
inline QHElement seidel_shift(const QHElement& x, long k) {
    const GrassmannianRing& R = as_grassmannian(x);
    QHElement out(x.ring_ptr());
    for (const auto& [lab, p] : x.terms()) {
        Monomial mo = seidel_multiply(R, {0, std::get<Partition>(lab)}, k);
        out.add_term(mo.shape, p.shifted(mo.qpow));
    }
    return out;
}

inline QHElement point_inverse_multiply(const QHElement& x) {
    const GrassmannianRing& R = as_grassmannian(x);
    return seidel_shift(x, -(R.N() - R.m()));
}

/// iota(q^d [X^lambda]) = q^-d [X^(lambda dual)] * P^-1.
inline QHElement strange_dual(const QHElement& x) {
    const GrassmannianRing& R = as_grassmannian(x);
    QHElement out(x.ring_ptr());
    for (const auto& [lab, p] : x.terms()) {
        Monomial mo = seidel_multiply(R, {0, dual_partition(R, std::get<Partition>(lab))}, -(R.N() - R.m()));
        for (const auto& [e, c] : p.terms()) out.add_term(mo.shape, LaurentPoly::monomial(mo.qpow - e, c));
    }
    return out;
}

/// coeff(a * iota(b), 1).
inline Rational strange_inner(const QHElement& a, const QHElement& b) {
    return (a * strange_dual(b)).coeff(a.ring().unit_label(), 0);
}

/// [E/P]_0 in the degree-0 basis: column j holds E * b_j * P^-1.
inline Matrix<Rational> ep_operator_matrix(const GrassmannianPtr& R, const DegreeZeroBasis& B) {
    QHElement E = euler_class_grassmann(R);
    Matrix<Rational> M(B.size(), Vec<Rational>(B.size()));
    for (std::size_t j = 0; j < B.size(); ++j) {
        QHElement col = point_inverse_multiply(E * B.element([&] {
                                                   Vec<Rational> e(B.size());
                                                   e[j] = 1;
                                                   return e;
                                               }()));
        Vec<Rational> c = B.coordinates(col);
        for (std::size_t i = 0; i < B.size(); ++i) M[i][j] = c[i];
    }
    return M;
}

/// One eigenvalue with an orthogonal basis of its eigenspace. Exact data is
/// present for rational and quadratic eigenvalues, numeric data always.
struct Eigenspace {
    Poly minimal_poly;
    int multiplicity = 1;
    std::optional<QuadSurd> exact_value;
    BigFloat value;
    std::vector<Vec<QuadSurd>> exact_vectors;
    std::vector<Vec<BigFloat>> vectors;
    std::vector<QuadSurd> exact_norms;
    std::vector<BigFloat> norms;
};

struct SpectralData {
    DegreeZeroBasis basis;
    Matrix<Rational> matrix;
    Poly charpoly;
    std::vector<std::pair<Poly, int>> squarefree;
    std::vector<std::pair<Poly, int>> factors;
    std::vector<Eigenspace> spaces;
    long digits = 64;
};

/// Matrix and characteristic polynomial only.
inline SpectralData spectral_matrix(const GrassmannianPtr& R, long digits = 64) {
    SpectralData s;
    s.basis = degree_zero_basis(R);
    s.matrix = ep_operator_matrix(R, s.basis);
    s.charpoly = char_poly(s.matrix);
    s.digits = digits;
    return s;
}

namespace detail {

template <class F>
void normalize_first_nonzero(Vec<F>& v) {
    for (const auto& x : v)
        if (!field_is_zero(x)) {
            F inv = F(1L) / x;
            for (auto& y : v) y = y * inv;
            return;
        }
}

inline void normalize_first_nonzero(Vec<BigFloat>& v, const BigFloat& tol) {
    for (const auto& x : v)
        if (abs(x) > tol) {
            BigFloat inv = BigFloat(1L, x.precision()) / x;
            for (auto& y : v) y = y * inv;
            return;
        }
}

inline bool lex_less(const Vec<BigFloat>& a, const Vec<BigFloat>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace detail

/// Fills eigenvalues, eigenvectors and norms. Every irreducible factor of the
/// characteristic polynomial must have only real roots.
inline SpectralData eigen_decompose(SpectralData s) {
    const mpfr_prec_t bits = working_bits(s.digits);
    const std::size_t n = s.matrix.size();
    s.squarefree = squarefree_decomposition(s.charpoly);
    s.factors.clear();
    s.spaces.clear();
    for (const auto& [f, mult] : s.squarefree)
        for (const auto& irr : factor_real_rooted(f, bits)) s.factors.emplace_back(irr, mult);

    Matrix<QuadSurd> Mq(n, Vec<QuadSurd>(n));
    Matrix<BigFloat> Mf(n, Vec<BigFloat>(n, BigFloat(0L, bits)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mq[i][j] = QuadSurd(s.matrix[i][j]);
            Mf[i][j] = BigFloat(s.matrix[i][j], bits);
        }
    const BigFloat tol = BigFloat::pow2(-static_cast<long>(bits / 2), bits);

    auto add_exact = [&](const Poly& f, int mult, const QuadSurd& lambda) {
        Matrix<QuadSurd> A = Mq;
        for (std::size_t i = 0; i < n; ++i) A[i][i] -= lambda;
        auto vs = nullspace(A, QuadSurd(0L), QuadSurd(1L));
        if (static_cast<int>(vs.size()) != mult) throw NumericalFailure("eigenspace dimension differs from multiplicity");
        gram_schmidt(vs, QuadSurd(0L));
        Eigenspace e;
        e.minimal_poly = f;
        e.multiplicity = mult;
        e.exact_value = lambda;
        e.value = lambda.to_bigfloat(bits);
        for (auto& v : vs) {
            detail::normalize_first_nonzero(v);
            QuadSurd nrm = dot(v, v, QuadSurd(0L));
            Vec<BigFloat> vf;
            for (const auto& x : v) vf.push_back(x.to_bigfloat(bits));
            e.exact_norms.push_back(nrm);
            e.norms.push_back(nrm.to_bigfloat(bits));
            e.vectors.push_back(std::move(vf));
            e.exact_vectors.push_back(std::move(v));
        }
        s.spaces.push_back(std::move(e));
    };

    for (const auto& [f, mult] : s.factors) {
        if (f.degree() == 1) {
            add_exact(f, mult, QuadSurd(Rational(-f[0] / f[1])));
        } else if (f.degree() == 2) {
            Rational b = f[1] / f[2], c = f[0] / f[2];
            QuadSurd root = QuadSurd::sqrt_of(b * b - 4 * c);
            QuadSurd half(Rational(1, 2));
            add_exact(f, mult, (QuadSurd(Rational(-b)) + root) * half);
            add_exact(f, mult, (QuadSurd(Rational(-b)) - root) * half);
        } else {
            for (auto [a, b] : isolate_real_roots(f)) {
                BigFloat lambda = refine_root(f, a, b, bits);
                Matrix<BigFloat> A = Mf;
                for (std::size_t i = 0; i < n; ++i) A[i][i] -= lambda;
                auto vs = numeric_nullspace(A, static_cast<std::size_t>(mult), bits);
                gram_schmidt(vs, BigFloat(0L, bits));
                Eigenspace e;
                e.minimal_poly = f;
                e.multiplicity = mult;
                e.value = lambda;
                for (auto& v : vs) {
                    detail::normalize_first_nonzero(v, tol);
                    e.norms.push_back(dot(v, v, BigFloat(0L, bits)));
                    e.vectors.push_back(std::move(v));
                }
                s.spaces.push_back(std::move(e));
            }
        }
    }
    std::size_t total = 0;
    for (const auto& e : s.spaces) total += e.vectors.size();
    if (total != n) throw NumericalFailure("operator is not diagonalizable over the reals");
    for (auto& e : s.spaces) {
        // ties inside an eigenspace: order vectors lexicographically
        std::vector<std::size_t> idx(e.vectors.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return detail::lex_less(e.vectors[a], e.vectors[b]); });
        Eigenspace sorted = e;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            sorted.vectors[i] = e.vectors[idx[i]];
            sorted.norms[i] = e.norms[idx[i]];
            if (e.exact_value) {
                sorted.exact_vectors[i] = e.exact_vectors[idx[i]];
                sorted.exact_norms[i] = e.exact_norms[idx[i]];
            }
        }
        e = std::move(sorted);
    }
    std::sort(s.spaces.begin(), s.spaces.end(), [](const Eigenspace& a, const Eigenspace& b) { return a.value > b.value; });
    return s;
}

inline SpectralData spectral_data(const GrassmannianPtr& R, long digits = 64) {
    return eigen_decompose(spectral_matrix(R, digits));
}

/// Residues s mod ord(P) for which some s = n + g >= 1 meets N | r (s - 1).
inline std::vector<long> admissible_residues(const GrassmannianRing& R) {
    const long N = R.N(), r = static_cast<long>(R.m()) * (N - R.m()), ord = R.ord_P();
    std::vector<long> out;
    for (long res = 0; res < ord; ++res)
        for (long s = res == 0 ? ord : res; s <= res + ord * N; s += ord)
            if (r * (s - 1) % N == 0) {
                out.push_back(res);
                break;
            }
    return out;
}

/// q^d P^(1-s) for the least s >= 1 in the residue class meeting the
/// dimension constraint.
inline std::optional<Monomial> residue_target(const GrassmannianRing& R, long residue) {
    const long N = R.N(), m = R.m(), r = m * (N - m), ord = R.ord_P();
    residue = floor_mod(residue, ord);
    for (long s = residue == 0 ? ord : residue; s <= residue + ord * N; s += ord)
        if (r * (s - 1) % N == 0) return seidel_multiply(R, {r * (s - 1) / N, Partition{}}, (N - m) * (1 - s));
    return std::nullopt;
}

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

/// ord(P) | d_q / gcd(d_q, r).
inline bool isone_predicate(long d_q, long dim, long ord_p) { return (d_q / gcd_l(d_q, dim)) % ord_p == 0; }

inline bool isone_predicate(const GrassmannianRing& R) {
    return isone_predicate(R.N(), static_cast<long>(R.m()) * (R.N() - R.m()), R.ord_P());
}

/// sum over eigenvalues of (sum_A A[0] A[target] / |A|^2) lambda^g for the
/// given residue of n + g. Exactly-zero weights are dropped.
inline ClosedForm synthesize_closed_form(const SpectralData& s, long residue, const std::string& space = "") {
    const GrassmannianRing& R = *s.basis.ring;
    auto target = residue_target(R, residue);
    if (!target) throw ConstraintError("residue " + std::to_string(residue) + " mod " + std::to_string(R.ord_P()) +
                                       " is not realized by any (g, d, n)");
    auto t = s.basis.index_of(*target);
    if (!t) throw NumericalFailure("target monomial lies outside the degree-0 basis");
    const mpfr_prec_t bits = working_bits(s.digits);
    const BigFloat tol = BigFloat::pow2(-static_cast<long>(bits / 2), bits);

    ClosedForm f;
    f.space = space.empty() ? "gr:" + std::to_string(R.m()) + "," + std::to_string(R.N()) : space;
    f.d_q = R.N();
    f.dim = static_cast<long>(R.m()) * (R.N() - R.m());
    f.ord_p = R.ord_P();
    if (!isone_predicate(R)) f.residue = floor_mod(residue, f.ord_p);
    f.source = "spectral";
    f.digits = s.digits;
    for (const auto& e : s.spaces) {
        if (e.exact_value) {
            QuadSurd w(0L);
            for (std::size_t i = 0; i < e.exact_vectors.size(); ++i)
                w += e.exact_vectors[i][0] * e.exact_vectors[i][*t] / e.exact_norms[i];
            if (w.is_zero()) continue;
            f.terms.push_back({w, *e.exact_value, Parity::None});
        } else {
            BigFloat w(0L, bits);
            for (std::size_t i = 0; i < e.vectors.size(); ++i) w += e.vectors[i][0] * e.vectors[i][*t] / e.norms[i];
            if (abs(w) <= tol) continue;
            f.terms.push_back({Complex{w, BigFloat(0L, bits)}, Complex{e.value, BigFloat(0L, bits)}, Parity::None});
        }
    }
    return f;
}

} // namespace tevelev
