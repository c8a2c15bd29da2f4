#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tevelev {

/// Integer partition, stored weakly decreasing without trailing zeros.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros; rejects increasing or negative sequences.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw InvalidArgument("partition with a negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidArgument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (a^b): b copies of a.
    static Partition rectangle(int a, int b) {
        if (a <= 0 || b <= 0) return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(b), a));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Part i (0-based); zero past the end.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// True when the diagram fits in `rows` rows and `cols` columns.
    bool fits(int rows, int cols) const { return length() <= rows && (empty() || parts_[0] <= cols); }

    /// Diagram containment, lambda ⊆ mu.
    bool contained_in(const Partition& mu) const {
        if (length() > mu.length()) return false;
        for (int i = 0; i < length(); ++i)
            if ((*this)[i] > mu[i]) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> out(static_cast<std::size_t>(empty() ? 0 : parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
        return Partition(std::move(out));
    }

    /// Parts padded with zeros to exactly `rows` entries (rows >= length()).
    std::vector<int> padded(int rows) const {
        std::vector<int> out(parts_);
        out.resize(static_cast<std::size_t>(std::max(rows, length())), 0);
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
};

/// All partitions fitting in a rows x cols rectangle, ordered by size then
/// reverse-lexicographically.
inline std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row == rows) {
            out.emplace_back(cur);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::stable_sort(out.begin(), out.end(),
                     [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
    return out;
}

/// All partitions of n with at most `max_rows` rows.
inline std::vector<Partition> partitions_of(int n, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int v = std::min(cap, remaining); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace tevelev
