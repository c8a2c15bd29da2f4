#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "grassmann.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace tevelev {

/// Unit step of a border path. Vertical steps go up one row, horizontal
/// steps go right one column.
enum class Step : char { Horizontal = 'H', Vertical = 'V' };

/// Corner of the box grid: y = row offset (grows downward), x = column offset.
struct LatticePoint {
    long y = 0;
    long x = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Order ideal of q^d [X^lambda] in Z^2 / Z(-m, N-m), stored as one period
/// of its border. The period starts at the anchor, the unique path point
/// with y - x = m, which is (m + d, d).
class CylinderIdeal {
public:
    int m() const { return m_; }
    int N() const { return N_; }
    long qpow() const { return d_; }
    const Partition& shape() const { return shape_; }
    const std::vector<Step>& border() const { return word_; }
    LatticePoint anchor() const { return {m_ + d_, d_}; }

    /// Point reached after k steps from the anchor (k may be negative).
    LatticePoint point(long k) const {
        long periods = floor_div(k, N_), rest = floor_mod(k, N_);
        LatticePoint p = anchor();
        p.y -= periods * m_;
        p.x += periods * (N_ - m_);
        for (long i = 0; i < rest; ++i) advance(p, word_[static_cast<std::size_t>(i)]);
        return p;
    }

    std::string border_string() const {
        std::string s;
        for (Step st : word_) s += static_cast<char>(st);
        return s;
    }

    /// Builds an ideal from an anchor with y - x = m and one border period.
    static CylinderIdeal from_border(int m, int N, LatticePoint anchor, std::vector<Step> word) {
        if (anchor.y - anchor.x != m) throw InvalidArgument("anchor must satisfy y - x = m");
        if (static_cast<int>(word.size()) != N) throw InvalidArgument("border period must have N steps");
        int ups = 0;
        for (Step s : word) ups += (s == Step::Vertical);
        if (ups != m) throw InvalidArgument("border period must have m vertical steps");
        std::vector<int> parts(static_cast<std::size_t>(m));
        int right = 0, row = m;
        for (Step s : word) {
            if (s == Step::Horizontal) {
                ++right;
            } else {
                parts[static_cast<std::size_t>(row - 1)] = right;
                --row;
            }
        }
        CylinderIdeal c;
        c.m_ = m;
        c.N_ = N;
        c.d_ = anchor.x;
        c.shape_ = Partition(parts);
        c.word_ = std::move(word);
        return c;
    }

    friend bool operator==(const CylinderIdeal& a, const CylinderIdeal& b) {
        return a.m_ == b.m_ && a.N_ == b.N_ && a.d_ == b.d_ && a.word_ == b.word_;
    }

    static void advance(LatticePoint& p, Step s) {
        if (s == Step::Horizontal) ++p.x;
        else --p.y;
    }

private:
    int m_ = 1, N_ = 2;
    long d_ = 0;
    Partition shape_;
    std::vector<Step> word_;
};

inline CylinderIdeal to_ideal(const GrassmannianRing& R, long d, const Partition& lambda) {
    require_rectangle(R, lambda);
    const int m = R.m(), w = R.N() - R.m();
    std::vector<Step> word;
    int col = 0;
    for (int i = m - 1; i >= 0; --i) {
        for (; col < lambda[i]; ++col) word.push_back(Step::Horizontal);
        word.push_back(Step::Vertical);
    }
    for (; col < w; ++col) word.push_back(Step::Horizontal);
    return CylinderIdeal::from_border(m, R.N(), {m + d, d}, std::move(word));
}

inline std::pair<long, Partition> from_ideal(const CylinderIdeal& c) { return {c.qpow(), c.shape()}; }

/// Ideal whose border is the old border moved by (a, b) = (rows, columns).
inline CylinderIdeal translate(const CylinderIdeal& c, long a, long b) {
    const long k = a - b; // old path index that lands on the new anchor diagonal
    LatticePoint p = c.point(k);
    p.y += a;
    p.x += b;
    std::vector<Step> word(static_cast<std::size_t>(c.N()));
    for (long i = 0; i < c.N(); ++i)
        word[static_cast<std::size_t>(i)] = c.border()[static_cast<std::size_t>(floor_mod(k + i, c.N()))];
    return CylinderIdeal::from_border(c.m(), c.N(), p, std::move(word));
}

inline void require_cylinder_constraint(const GrassmannianRing& R, long d, long k) {
    const long m = R.m(), N = R.N();
    if (N * d + m * k != m * (N - m)) throw ConstraintError("cylinder count needs N d + m k = m (N - m)");
}

/// Borders through the upper-right corner of the rectangle invariant under
/// (-d, N-m-k-d) and (-m, N-m). Candidates are the words of length cN/m with
/// c vertical steps, c = gcd(d, m), repeated to a full period; each candidate
/// is checked against the translation before it is counted.
inline Integer count_fixed_paths(const GrassmannianRing& R, long d, long k) {
    require_cylinder_constraint(R, d, k);
    const int m = R.m(), N = R.N();
    const long c = std::gcd(d, static_cast<long>(m));
    const long len = c * N / m;
    Integer count = 0;
    std::vector<Step> block;
    auto rec = [&](auto&& self, long ups_left) -> void {
        if (static_cast<long>(block.size()) == len) {
            if (ups_left != 0) return;
            std::vector<Step> word;
            for (long rep = 0; rep < m / c; ++rep) word.insert(word.end(), block.begin(), block.end());
            // a path through (0, N-m) also passes (m, 0), the anchor of q^0
            CylinderIdeal ideal = CylinderIdeal::from_border(m, N, {m, 0}, std::move(word));
            if (translate(ideal, -d, N - m - k - d) == ideal) count += 1;
            return;
        }
        long remaining = len - static_cast<long>(block.size());
        if (ups_left < remaining) {
            block.push_back(Step::Horizontal);
            self(self, ups_left);
            block.pop_back();
        }
        if (ups_left > 0) {
            block.push_back(Step::Vertical);
            self(self, ups_left - 1);
            block.pop_back();
        }
    };
    rec(rec, c);
    return count;
}

/// Schubert classes fixed by q^{-d} [X^(1^m)]^{N-m-k}, by direct enumeration
/// of the rectangle.
inline Integer count_fixed_partitions(const GrassmannianRing& R, long d, long k) {
    require_cylinder_constraint(R, d, k);
    Integer count = 0;
    for (const auto& p : partitions_in_rectangle(R.m(), R.N() - R.m())) {
        CylinderIdeal ideal = to_ideal(R, 0, p);
        if (translate(ideal, -d, R.N() - R.m() - k - d) == ideal) count += 1;
    }
    return count;
}

/// All (d, k) with 0 <= k < N and N d + m k = m (N - m).
inline std::vector<std::pair<long, long>> admissible_seidel_labels(const GrassmannianRing& R) {
    std::vector<std::pair<long, long>> out;
    const long m = R.m(), N = R.N();
    for (long k = 0; k < N; ++k) {
        long num = m * (N - m) - m * k;
        if (num % N == 0) out.emplace_back(num / N, k);
    }
    return out;
}

} // namespace tevelev
