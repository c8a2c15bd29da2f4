#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace tevelev {

/// Label H^{*i} of the power basis of a complete-intersection ring.
struct PowerIndex {
    int i = 0;
    friend auto operator<=>(const PowerIndex&, const PowerIndex&) = default;
};

using BasisLabel = std::variant<PowerIndex, Partition>;

inline std::string label_key(const BasisLabel& l) {
    if (const auto* p = std::get_if<PowerIndex>(&l)) return "H^" + std::to_string(p->i);
    return std::get<Partition>(l).to_string();
}

enum class RingKind { Projective, Grassmannian, CompleteIntersection };

/// Euler characteristic of a complete intersection of multidegree m in P^{r+L}:
/// prod(m) times the h^r coefficient of (1+h)^{r+L+1} / prod(1+m_i h).
inline Integer ci_euler_characteristic(int r, const std::vector<int>& m) {
    const int L = static_cast<int>(m.size());
    std::vector<Integer> series(static_cast<std::size_t>(r + 1));
    for (int k = 0; k <= r; ++k) series[static_cast<std::size_t>(k)] = binomial(r + L + 1, k);
    for (int mi : m) {
        // divide by (1 + mi h): s_k <- s_k - mi s_{k-1}, in increasing k
        for (int k = 1; k <= r; ++k)
            series[static_cast<std::size_t>(k)] -= mi * series[static_cast<std::size_t>(k - 1)];
    }
    Integer prod = 1;
    for (int mi : m) prod *= mi;
    return prod * series[static_cast<std::size_t>(r)];
}

/// Which ring, plus the numerical invariants the engine needs.
struct RingDescriptor {
    RingKind kind = RingKind::Projective;
    int dim_r = 0;
    int fano_index = 0;
    Integer euler_char = 0;
    int L = 0;
    std::vector<int> m_vector;
    int gr_m = 0;
    int gr_N = 0;

    static RingDescriptor projective(int r) {
        if (r < 1) throw InvalidArgument("projective space needs r >= 1");
        RingDescriptor d;
        d.kind = RingKind::Projective;
        d.dim_r = r;
        d.fano_index = r + 1;
        d.euler_char = r + 1;
        return d;
    }

    static RingDescriptor grassmannian(int m, int N) {
        if (m < 1 || m >= N) throw InvalidArgument("Grassmannian Gr(m,N) needs 1 <= m < N");
        RingDescriptor d;
        d.kind = RingKind::Grassmannian;
        d.gr_m = m;
        d.gr_N = N;
        d.dim_r = m * (N - m);
        d.fano_index = N;
        d.euler_char = binomial(N, m);
        return d;
    }

    /// Throws OutOfRange outside mi >= 2, r >= 3, |m| <= r+L-1, r >= 2|m|-2L-2.
    static RingDescriptor complete_intersection(int r, std::vector<int> m) {
        if (m.empty()) throw InvalidArgument("complete intersection needs at least one degree");
        for (int mi : m)
            if (mi < 1) throw InvalidArgument("complete intersection degrees must be positive");
        std::sort(m.begin(), m.end());
        const int L = static_cast<int>(m.size());
        const int sum = std::accumulate(m.begin(), m.end(), 0);
        const std::string range = "implemented range is m_i >= 2, r >= 3, |m| <= r+L-1, r >= 2|m|-2L-2";
        if (m.front() < 2) throw OutOfRange("linear sections are not supported; " + range);
        if (r < 3) throw OutOfRange("r = " + std::to_string(r) + " too small; " + range);
        if (sum > r + L - 1) throw OutOfRange("not Fano of index >= 2; " + range);
        if (r < 2 * sum - 2 * L - 2) throw OutOfRange("r below 2|m|-2L-2; " + range);
        RingDescriptor d;
        d.kind = RingKind::CompleteIntersection;
        d.dim_r = r;
        d.L = L;
        d.m_vector = std::move(m);
        d.fano_index = r + L + 1 - sum;
        d.euler_char = ci_euler_characteristic(r, d.m_vector);
        return d;
    }

    int degree_sum() const { return std::accumulate(m_vector.begin(), m_vector.end(), 0); }

    /// Text form accepted by the space parser.
    std::string name() const {
        switch (kind) {
        case RingKind::Projective: return "p:" + std::to_string(dim_r);
        case RingKind::Grassmannian: return "gr:" + std::to_string(gr_m) + "," + std::to_string(gr_N);
        case RingKind::CompleteIntersection: {
            std::string s = "ci:" + std::to_string(dim_r) + ":";
            for (std::size_t i = 0; i < m_vector.size(); ++i) s += (i ? "," : "") + std::to_string(m_vector[i]);
            return s;
        }
        }
        return "?";
    }

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return a.kind == b.kind && a.dim_r == b.dim_r && a.m_vector == b.m_vector && a.gr_m == b.gr_m &&
               a.gr_N == b.gr_N;
    }
};

using Terms = std::map<BasisLabel, LaurentPoly>;

/// A graded ring over Q[q, q^-1] with a finite basis and a precomputed
/// basis-product table. Degrees are real degrees (deg q = 2 * fano_index).
class Ring {
public:
    explicit Ring(RingDescriptor d) : desc_(std::move(d)) {}
    virtual ~Ring() = default;
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    const RingDescriptor& descriptor() const { return desc_; }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    std::size_t basis_size() const { return basis_.size(); }

    bool valid_label(const BasisLabel& l) const { return index_.count(l) != 0; }
    std::size_t index_of(const BasisLabel& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw InvalidArgument("label " + label_key(l) + " is not in the basis of " + desc_.name());
        return it->second;
    }

    virtual int label_degree(const BasisLabel& l) const = 0;
    virtual BasisLabel unit_label() const = 0;
    /// Top-degree basis label; the point class is a multiple of it at q^0.
    virtual BasisLabel top_label() const = 0;
    /// Short human-readable name used in printed expansions.
    virtual std::string label_name(const BasisLabel& l) const = 0;

    const Terms& basis_product(const BasisLabel& a, const BasisLabel& b) const {
        return table_[index_of(a) * basis_.size() + index_of(b)];
    }
    const Terms& basis_product(std::size_t ia, std::size_t ib) const { return table_[ia * basis_.size() + ib]; }

protected:
    void set_basis(std::vector<BasisLabel> labels) {
        basis_ = std::move(labels);
        index_.clear();
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
        table_.assign(basis_.size() * basis_.size(), Terms{});
    }
    void set_product(std::size_t ia, std::size_t ib, Terms t) { table_[ia * basis_.size() + ib] = std::move(t); }

private:
    RingDescriptor desc_;
    std::vector<BasisLabel> basis_;
    std::map<BasisLabel, std::size_t> index_;
    std::vector<Terms> table_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Element of a quantum ring: sparse map label -> Laurent polynomial in q.
class QHElement {
public:
    explicit QHElement(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw InvalidArgument("null ring");
    }

    static QHElement basis(RingPtr ring, const BasisLabel& label, long qpow = 0, const Rational& c = 1) {
        QHElement e(std::move(ring));
        e.add_term(label, LaurentPoly::monomial(qpow, c));
        return e;
    }
    static QHElement one(RingPtr ring) {
        BasisLabel u = ring->unit_label();
        return basis(std::move(ring), u);
    }
    static QHElement q_power(RingPtr ring, long k, const Rational& c = 1) {
        BasisLabel u = ring->unit_label();
        return basis(std::move(ring), u, k, c);
    }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const BasisLabel& label, long qpow) const {
        ring_->index_of(label);
        auto it = terms_.find(label);
        return it == terms_.end() ? Rational(0) : it->second.coeff(qpow);
    }

    const LaurentPoly& poly(const BasisLabel& label) const {
        static const LaurentPoly zero;
        auto it = terms_.find(label);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const BasisLabel& label, const LaurentPoly& p) {
        ring_->index_of(label);
        if (p.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(label, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Multiply by q^k.
    QHElement q_shift(long k) const {
        QHElement out(ring_);
        for (const auto& [l, p] : terms_) out.terms_.emplace(l, p.shifted(k));
        return out;
    }

    /// Common real degree of all monomials, or nullopt if inhomogeneous/zero.
    std::optional<long> degree() const {
        std::optional<long> deg;
        const long dq = 2L * ring_->descriptor().fano_index;
        for (const auto& [l, p] : terms_)
            for (const auto& [e, c] : p.terms()) {
                long dd = ring_->label_degree(l) + e * dq;
                if (deg && *deg != dd) return std::nullopt;
                deg = dd;
            }
        return deg;
    }

    QHElement& operator+=(const QHElement& o) {
        check_same(o);
        for (const auto& [l, p] : o.terms_) add_term(l, p);
        return *this;
    }
    QHElement& operator-=(const QHElement& o) {
        check_same(o);
        for (const auto& [l, p] : o.terms_) add_term(l, -p);
        return *this;
    }
    QHElement& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [l, p] : terms_) p *= s;
        return *this;
    }

    friend QHElement operator+(QHElement a, const QHElement& b) { return a += b; }
    friend QHElement operator-(QHElement a, const QHElement& b) { return a -= b; }
    friend QHElement operator-(QHElement a) { return a *= Rational(-1); }
    friend QHElement operator*(QHElement a, const Rational& s) { return a *= s; }
    friend QHElement operator*(const Rational& s, QHElement a) { return a *= s; }

    friend QHElement operator*(const QHElement& a, const QHElement& b) {
        a.check_same(b);
        const Ring& R = *a.ring_;
        std::map<std::size_t, LaurentPoly> acc;
        for (const auto& [la, pa] : a.terms_) {
            std::size_t ia = R.index_of(la);
            for (const auto& [lb, pb] : b.terms_) {
                LaurentPoly prod = pa * pb;
                for (const auto& [lc, pc] : R.basis_product(ia, R.index_of(lb))) acc[R.index_of(lc)] += prod * pc;
            }
        }
        QHElement out(a.ring_);
        for (auto& [ic, p] : acc)
            if (!p.is_zero()) out.terms_.emplace(R.basis()[ic], std::move(p));
        return out;
    }
    QHElement& operator*=(const QHElement& o) { return *this = *this * o; }

    friend bool operator==(const QHElement& a, const QHElement& b) {
        return a.ring_->descriptor() == b.ring_->descriptor() && a.terms_ == b.terms_;
    }

    /// e.g. "6*P + 2*q"; terms by label degree descending, then q power ascending.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        struct Mono {
            int ldeg;
            long e;
            std::string label;
            Rational c;
        };
        std::vector<Mono> monos;
        for (const auto& [l, p] : terms_)
            for (const auto& [e, c] : p.terms())
                monos.push_back({ring_->label_degree(l), e, l == ring_->unit_label() ? "" : ring_->label_name(l), c});
        std::stable_sort(monos.begin(), monos.end(), [](const Mono& x, const Mono& y) {
            if (x.ldeg != y.ldeg) return x.ldeg > y.ldeg;
            return x.e < y.e;
        });
        std::string s;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            const Mono& mo = monos[i];
            Rational c = mo.c;
            if (i == 0) {
                if (c < 0) {
                    s += "-";
                    c = -c;
                }
            } else {
                s += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            std::vector<std::string> factors;
            if (mo.e != 0) factors.push_back(mo.e == 1 ? "q" : "q^" + std::to_string(mo.e));
            if (!mo.label.empty()) factors.push_back(mo.label);
            std::string cs = tevelev::to_string(c);
            if (!is_integer(c)) cs = "(" + cs + ")";
            if (factors.empty()) {
                s += cs;
                continue;
            }
            std::string body;
            for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
            s += (c == 1) ? body : cs + "*" + body;
        }
        return s;
    }

private:
    void check_same(const QHElement& o) const {
        if (ring_ != o.ring_ && !(ring_->descriptor() == o.ring_->descriptor()))
            throw RingMismatch("operands live in " + ring_->descriptor().name() + " and " +
                               o.ring_->descriptor().name());
    }

    RingPtr ring_;
    Terms terms_;
};

/// a^k by square-and-multiply; a^0 = 1.
inline QHElement pow(const QHElement& a, unsigned long k) {
    QHElement result = QHElement::one(a.ring_ptr());
    QHElement base = a;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

inline Rational coeff_extract(const QHElement& a, const BasisLabel& label, long qpow) { return a.coeff(label, qpow); }

} // namespace tevelev
