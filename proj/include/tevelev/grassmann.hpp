#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace tevelev {

using SchurExpansion = std::map<Partition, Integer>;

/// Pieri rule: s_lambda * h_a, keeping only shapes with at most max_rows rows.
inline SchurExpansion pieri_h(const Partition& lambda, int a, int max_rows) {
    SchurExpansion out;
    if (a < 0) return out;
    const int rows = std::min(max_rows, lambda.length() + 1);
    if (lambda.length() > max_rows) return out;
    std::vector<int> nu = lambda.padded(rows);
    std::vector<int> base = nu;
    // distribute a boxes: row i gains at most base[i-1] - base[i] (row 0 unbounded)
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows) {
            if (left == 0) out[Partition(nu)] += 1;
            return;
        }
        int cap = (i == 0) ? left : std::min(left, base[static_cast<std::size_t>(i - 1)] - base[static_cast<std::size_t>(i)]);
        for (int add = cap; add >= 0; --add) {
            nu[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)] + add;
            self(self, i + 1, left - add);
        }
        nu[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)];
    };
    rec(rec, 0, a);
    return out;
}

/// Classical product s_lambda * s_mu in at most max_rows variables, via the
/// Jacobi-Trudi expansion of s_mu and iterated Pieri steps. Shapes are packed
/// into 64-bit keys (8 bits per row) when max_rows <= 8.
class SchurMultiplier {
public:
    explicit SchurMultiplier(int max_rows) : rows_(max_rows) {}

    SchurExpansion product(Partition lambda, Partition mu) {
        SchurExpansion out;
        if (lambda.length() > rows_ || mu.length() > rows_) return out;
        if (mu.length() > lambda.length()) std::swap(lambda, mu);
        // s_mu = sum over permutations of signed h-products; h's commute, so
        // collect the signs per sorted index multiset first.
        std::map<std::vector<int>, long> hterms;
        const int l = mu.length();
        std::vector<int> perm(static_cast<std::size_t>(l));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> alpha;
            bool dead = false;
            for (int i = 0; i < l; ++i) {
                int a = mu[i] - i + perm[static_cast<std::size_t>(i)];
                if (a < 0) {
                    dead = true;
                    break;
                }
                if (a > 0) alpha.push_back(a);
            }
            if (dead) continue;
            std::sort(alpha.begin(), alpha.end(), std::greater<>());
            hterms[alpha] += permutation_sign(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (packable(lambda, mu)) {
            std::map<std::uint64_t, long> acc;
            for (const auto& [alpha, sign] : hterms) {
                if (sign == 0) continue;
                std::map<std::uint64_t, long> cur{{pack(lambda), 1}};
                for (int a : alpha) {
                    std::map<std::uint64_t, long> next;
                    for (const auto& [nu, c] : cur)
                        for (const auto& [rho, c2] : pieri_packed(nu, a)) next[rho] += c * c2;
                    cur = std::move(next);
                }
                for (const auto& [nu, c] : cur) acc[nu] += sign * c;
            }
            for (const auto& [k, c] : acc)
                if (c != 0) out.emplace(unpack(k), Integer(c));
            return out;
        }
        for (const auto& [alpha, sign] : hterms) {
            if (sign == 0) continue;
            SchurExpansion cur{{lambda, Integer(1)}};
            for (int a : alpha) {
                SchurExpansion next;
                for (const auto& [nu, c] : cur)
                    for (const auto& [rho, c2] : pieri(nu, a)) next[rho] += c * c2;
                cur = std::move(next);
            }
            for (const auto& [nu, c] : cur) out[nu] += sign * c;
        }
        for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
        return out;
    }

private:
    bool packable(const Partition& lambda, const Partition& mu) const {
        return rows_ <= 8 && lambda[0] + mu.size() <= 255;
    }

    std::uint64_t pack(const Partition& p) const {
        std::uint64_t k = 0;
        for (int i = 0; i < rows_; ++i) k |= static_cast<std::uint64_t>(p[i]) << (8 * (7 - i));
        return k;
    }
    Partition unpack(std::uint64_t k) const {
        std::vector<int> parts(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) parts[static_cast<std::size_t>(i)] = static_cast<int>((k >> (8 * (7 - i))) & 0xff);
        return Partition(parts);
    }

    const std::vector<std::pair<std::uint64_t, long>>& pieri_packed(std::uint64_t nu, int a) {
        auto key = std::make_pair(nu, a);
        auto it = memo_packed_.find(key);
        if (it != memo_packed_.end()) return it->second;
        std::vector<std::pair<std::uint64_t, long>> v;
        for (const auto& [rho, c] : pieri_h(unpack(nu), a, rows_)) v.emplace_back(pack(rho), c.get_si());
        return memo_packed_.emplace(key, std::move(v)).first->second;
    }

    const SchurExpansion& pieri(const Partition& nu, int a) {
        auto key = std::make_pair(nu, a);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(key, pieri_h(nu, a, rows_)).first->second;
    }

    static int permutation_sign(const std::vector<int>& p) {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return (inv % 2) ? -1 : 1;
    }

    int rows_;
    std::map<std::pair<Partition, int>, SchurExpansion> memo_;
    std::map<std::pair<std::uint64_t, int>, std::vector<std::pair<std::uint64_t, long>>> memo_packed_;
};

/// Littlewood-Richardson coefficient c^nu_{lambda mu}.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!lambda.contained_in(nu) || !mu.contained_in(nu)) return 0;
    SchurMultiplier mult(nu.length());
    auto prod = mult.product(lambda, mu);
    auto it = prod.find(nu);
    return it == prod.end() ? Integer(0) : it->second;
}

/// Result of stripping N-rim-hooks from a shape with at most m rows.
struct RimHookResult {
    int sign = 0; // 0 when the shape reduces to nothing
    int qpow = 0;
    Partition shape;
};

/// Removes N-rim-hooks until the shape fits in the m x (N-m) rectangle. Each
/// removal contributes q and (-1)^(m - height). Works on beta-numbers
/// beta_i = nu_i + m - i.
inline RimHookResult rim_hook_reduce(const Partition& nu, int m, int N) {
    RimHookResult res;
    if (nu.length() > m) return res;
    std::vector<int> beta(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) beta[static_cast<std::size_t>(i)] = nu[i] + m - 1 - i;
    int sign = 1, q = 0;
    while (beta[0] > N - 1) {
        int b = beta[0] - N;
        if (b < 0) return res;
        int between = 0;
        for (int i = 1; i < m; ++i) {
            int x = beta[static_cast<std::size_t>(i)];
            if (x == b) return res;
            if (x > b) ++between;
        }
        // height of the hook is between + 1
        int height = between + 1;
        if ((m - height) % 2) sign = -sign;
        ++q;
        beta.erase(beta.begin());
        beta.insert(beta.begin() + between, b);
    }
    std::vector<int> parts(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (m - 1 - i);
    res.sign = sign;
    res.qpow = q;
    res.shape = Partition(parts);
    return res;
}

/// QH*(Gr(m,N)) in the Schubert basis, product table built on construction.
class GrassmannianRing : public Ring {
public:
    GrassmannianRing(int m, int N) : Ring(RingDescriptor::grassmannian(m, N)), m_(m), N_(N) {
        std::vector<BasisLabel> labels;
        for (auto& p : partitions_in_rectangle(m, N - m)) labels.emplace_back(p);
        set_basis(labels);
        SchurMultiplier mult(m);
        const auto& B = basis();
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = i; j < B.size(); ++j) {
                Terms t;
                for (const auto& [nu, c] : mult.product(std::get<Partition>(B[i]), std::get<Partition>(B[j]))) {
                    RimHookResult r = rim_hook_reduce(nu, m, N);
                    if (r.sign == 0) continue;
                    LaurentPoly p = LaurentPoly::monomial(r.qpow, Rational(c * r.sign));
                    auto [it, ins] = t.try_emplace(BasisLabel(r.shape), p);
                    if (!ins) {
                        it->second += p;
                        if (it->second.is_zero()) t.erase(it);
                    }
                }
                if (i != j) set_product(j, i, t);
                set_product(i, j, std::move(t));
            }
    }

    int m() const { return m_; }
    int N() const { return N_; }
    int ord_P() const { return N_ / std::gcd(m_, N_); }

    int label_degree(const BasisLabel& l) const override { return 2 * std::get<Partition>(l).size(); }
    BasisLabel unit_label() const override { return Partition{}; }
    BasisLabel top_label() const override { return Partition::rectangle(N_ - m_, m_); }
    std::string label_name(const BasisLabel& l) const override {
        const auto& p = std::get<Partition>(l);
        if (p.empty()) return "1";
        if (BasisLabel(p) == top_label()) return "P";
        return "X" + p.to_string();
    }

    bool in_rectangle(const Partition& p) const { return p.fits(m_, N_ - m_); }

private:
    int m_, N_;
};

using GrassmannianPtr = std::shared_ptr<const GrassmannianRing>;

/// Shared, lazily built Gr(m,N). Guarded so concurrent callers see one table.
inline GrassmannianPtr grassmannian(int m, int N) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, GrassmannianPtr> cache;
    RingDescriptor::grassmannian(m, N); // validates
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{m, N}];
    if (!slot) slot = std::make_shared<const GrassmannianRing>(m, N);
    return slot;
}

inline void require_rectangle(const GrassmannianRing& R, const Partition& p) {
    if (!R.in_rectangle(p))
        throw InvalidArgument("partition " + p.to_string() + " does not fit the " + std::to_string(R.m()) + "x" +
                              std::to_string(R.N() - R.m()) + " rectangle");
}

inline QHElement schubert(const GrassmannianPtr& R, const Partition& p, long qpow = 0, const Rational& c = 1) {
    require_rectangle(*R, p);
    return QHElement::basis(R, p, qpow, c);
}

inline QHElement quantum_product(const GrassmannianPtr& R, const Partition& a, const Partition& b) {
    return schubert(R, a) * schubert(R, b);
}

inline QHElement point_class(const GrassmannianPtr& R) { return QHElement::basis(R, R->top_label()); }

/// Complement in the rectangle: lambda^v_i = N - m - lambda_{m+1-i}.
inline Partition dual_partition(const GrassmannianRing& R, const Partition& p) {
    require_rectangle(R, p);
    std::vector<int> out(static_cast<std::size_t>(R.m()));
    for (int i = 0; i < R.m(); ++i) out[static_cast<std::size_t>(i)] = R.N() - R.m() - p[R.m() - 1 - i];
    return Partition(out);
}

/// A basis monomial q^qpow [X^shape].
struct Monomial {
    long qpow = 0;
    Partition shape;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// One multiplication by the Seidel class [X^(1^m)].
inline Monomial seidel_step(const GrassmannianRing& R, Monomial x) {
    const int m = R.m(), w = R.N() - R.m();
    if (x.shape[0] < w) {
        std::vector<int> p = x.shape.padded(m);
        for (int& v : p) ++v;
        return {x.qpow, Partition(p)};
    }
    std::vector<int> p;
    for (int i = 1; i < m; ++i) p.push_back(x.shape[i]);
    return {x.qpow + 1, Partition(p)};
}

/// [X^(1^m)]^k * q^qpow [X^shape] for any integer k, using S^N = q^m.
inline Monomial seidel_multiply(const GrassmannianRing& R, Monomial x, long k) {
    const long N = R.N();
    long full = floor_div(k, N), rest = floor_mod(k, N);
    x.qpow += full * R.m();
    for (long i = 0; i < rest; ++i) x = seidel_step(R, x);
    return x;
}

/// [X^(1^m)]^k for 0 <= k <= N, as (q power, shape).
inline Monomial seidel_power(const GrassmannianRing& R, int k) {
    if (k < 0 || k > R.N()) throw InvalidArgument("Seidel exponent must lie in 0..N");
    const int m = R.m(), N = R.N();
    if (k <= N - m) return {0, Partition::rectangle(k, m)};
    return {k - N + m, Partition::rectangle(N - m, N - k)};
}

/// q^d P * [X^lambda] as a single basis monomial.
inline Monomial point_multiply(const GrassmannianRing& R, long d, const Partition& lambda) {
    require_rectangle(R, lambda);
    return seidel_multiply(R, {d, lambda}, R.N() - R.m());
}

/// E = sum over the basis of [X^(lambda^v)] * [X^lambda].
inline QHElement euler_class_grassmann(const GrassmannianPtr& R) {
    QHElement e(R);
    for (const auto& l : R->basis()) {
        const auto& p = std::get<Partition>(l);
        e += quantum_product(R, dual_partition(*R, p), p);
    }
    return e;
}

/// binomial(cN/m, c), c = gcd(d, m); requires N d = m(N-m) n.
inline Integer genus_one_formula(const GrassmannianRing& R, long d, long n) {
    const long m = R.m(), N = R.N(), r = m * (N - m);
    if (d < 0 || n < 0 || N * d != r * n)
        throw ConstraintError("genus-one formula needs N d = r n with d, n >= 0");
    long c = std::gcd(d, m);
    return binomial(c * N / m, c);
}

} // namespace tevelev
