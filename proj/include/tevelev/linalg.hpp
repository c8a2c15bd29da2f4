#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace tevelev {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
using Vec = std::vector<F>;

inline bool field_is_zero(const Rational& x) { return x == 0; }

template <class F>
bool field_is_zero(const F& x) {
    return x.is_zero();
}

template <class F>
bool is_symmetric(const Matrix<F>& A) {
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(A[i][j] == A[j][i])) return false;
    return true;
}

template <class F>
Vec<F> mat_vec(const Matrix<F>& A, const Vec<F>& v, const F& zero) {
    Vec<F> out(A.size(), zero);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += A[i][j] * v[j];
    return out;
}

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b, const F& zero) {
    F s = zero;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// det(x I - A) by Berkowitz's division-free recursion.
inline Poly char_poly(const Matrix<Rational>& A) {
    const std::size_t n = A.size();
    if (n == 0) return Poly(Rational(1));
    // coefficients high to low
    std::vector<Rational> v{Rational(1), Rational(-A[0][0])};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Rational> t{Rational(1), Rational(-A[r][r])};
        Vec<Rational> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = A[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            Rational s = 0;
            for (std::size_t j = 0; j < r; ++j) s += A[r][j] * col[j];
            t.push_back(-s);
            Vec<Rational> next(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += A[i][j] * col[j];
            col = std::move(next);
        }
        std::vector<Rational> nv(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * v[j];
        v = std::move(nv);
    }
    std::vector<Rational> low(v.rbegin(), v.rend());
    return Poly(std::move(low));
}

/// Determinant by Bareiss fraction-free elimination (integer matrices stay
/// integral throughout).
inline Rational bareiss_det(Matrix<Rational> A) {
    const std::size_t n = A.size();
    if (n == 0) return 1;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

/// Basis of the kernel of A over an exact field, one vector per free column
/// of the reduced row echelon form.
template <class F>
std::vector<Vec<F>> nullspace(Matrix<F> A, const F& zero, const F& one) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field_is_zero(A[p][c])) ++p;
        if (p == rows) continue;
        std::swap(A[r], A[p]);
        F inv = one / A[r][c];
        for (auto& x : A[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field_is_zero(A[i][c])) continue;
            F f = A[i][c];
            for (std::size_t j = 0; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Vec<F>> out;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(cols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = zero - A[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

/// Kernel of a numeric matrix whose nullity is known to be `dim`: full
/// pivoting picks cols - dim pivots, the rest are free.
inline std::vector<Vec<BigFloat>> numeric_nullspace(Matrix<BigFloat> A, std::size_t dim, mpfr_prec_t bits) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    if (dim > cols) throw InvalidArgument("nullity larger than the matrix");
    const std::size_t rank = cols - dim;
    std::vector<std::size_t> colperm(cols);
    for (std::size_t i = 0; i < cols; ++i) colperm[i] = i;
    for (std::size_t k = 0; k < rank; ++k) {
        std::size_t bi = k, bj = k;
        BigFloat best(0L, bits);
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (abs(A[i][colperm[j]]) > best) {
                    best = abs(A[i][colperm[j]]);
                    bi = i;
                    bj = j;
                }
        if (best.is_zero()) throw NumericalFailure("numeric rank below expectation");
        std::swap(A[k], A[bi]);
        std::swap(colperm[k], colperm[bj]);
        const BigFloat piv = A[k][colperm[k]];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k) continue;
            BigFloat f = A[i][colperm[k]] / piv;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) A[i][j] -= f * A[k][j];
        }
    }
    std::vector<Vec<BigFloat>> out;
    for (std::size_t fidx = rank; fidx < cols; ++fidx) {
        Vec<BigFloat> v(cols, BigFloat(0L, bits));
        v[colperm[fidx]] = BigFloat(1L, bits);
        for (std::size_t k = 0; k < rank; ++k) v[colperm[k]] = -(A[k][colperm[fidx]] / A[k][colperm[k]]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Orthogonalizes vectors in place under the plain dot product.
template <class F>
void gram_schmidt(std::vector<Vec<F>>& vs, const F& zero) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            F f = dot(vs[i], vs[j], zero) / dot(vs[j], vs[j], zero);
            for (std::size_t t = 0; t < vs[i].size(); ++t) vs[i][t] = vs[i][t] - f * vs[j][t];
        }
    }
}

} // namespace tevelev
