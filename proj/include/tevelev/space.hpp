#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace tevelev {

class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A parsed space string. Ring spaces carry a descriptor; lg/og/e6/e7 are
/// formula-only; prod(...) holds its factors.
struct SpaceSpec {
    std::string tag;
    std::optional<RingDescriptor> ring;
    std::vector<SpaceSpec> factors;

    bool is_product() const { return !factors.empty(); }
    bool formula_only() const { return !ring && !is_product(); }
    bool is_quadric() const { return tag.rfind("q:", 0) == 0; }

    const RingDescriptor& require_ring(const std::string& command) const {
        if (!ring)
            throw OutOfRange(command + " needs a space with an implemented ring; " + tag +
                             (is_product() ? " is a product" : " is formula-only"));
        return *ring;
    }
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view whole) {
    if (s.empty() || s.size() > 6) throw ParseError("bad integer in space '" + std::string(whole) + "'");
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad integer in space '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view whole) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? comma : comma - start), whole));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Splits at top-level commas.
inline std::vector<std::string_view> split_top(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

/// Factors of a product are themselves spaces like gr:2,5 whose commas are
/// not separators; splits at commas that start a new tag.
inline std::vector<std::string_view> split_factors(std::string_view s) {
    std::vector<std::string_view> pieces = split_top(s), out;
    for (auto p : pieces) {
        bool starts_tag = !p.empty() && !std::isdigit(static_cast<unsigned char>(p[0]));
        if (starts_tag || out.empty()) out.push_back(p);
        else out.back() = std::string_view(out.back().data(), static_cast<std::size_t>(p.data() + p.size() - out.back().data()));
    }
    return out;
}

} // namespace detail

inline constexpr int kMaxRingDimension = 64;

inline SpaceSpec parse_space(std::string_view s) {
    SpaceSpec sp;
    sp.tag = std::string(s);
    if (s.rfind("prod(", 0) == 0) {
        if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + sp.tag + "'");
        for (auto f : detail::split_factors(s.substr(5, s.size() - 6))) sp.factors.push_back(parse_space(f));
        if (sp.factors.size() < 2) throw ParseError("a product needs at least two factors");
        return sp;
    }
    if (s == "e6" || s == "e7") return sp;
    std::size_t colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError("unknown space '" + sp.tag + "'");
    std::string_view kind = s.substr(0, colon), rest = s.substr(colon + 1);
    if (kind == "p") {
        sp.ring = RingDescriptor::projective(detail::parse_int(rest, s));
    } else if (kind == "q") {
        int r = detail::parse_int(rest, s);
        if (r < 3) throw OutOfRange("quadrics are covered for r >= 3");
        sp.ring = RingDescriptor::complete_intersection(r, {2});
    } else if (kind == "gr") {
        auto v = detail::parse_int_list(rest, s);
        if (v.size() != 2) throw ParseError("gr needs m,N");
        if (v[0] < 1 || v[0] >= v[1]) throw ParseError("gr:m,N needs 1 <= m < N");
        if (v[1] > 10) throw OutOfRange("Grassmannians are implemented for N <= 10");
        sp.ring = RingDescriptor::grassmannian(v[0], v[1]);
    } else if (kind == "ci") {
        std::size_t c2 = rest.find(':');
        if (c2 == std::string_view::npos) throw ParseError("ci needs r:m1,m2,...");
        int r = detail::parse_int(rest.substr(0, c2), s);
        sp.ring = RingDescriptor::complete_intersection(r, detail::parse_int_list(rest.substr(c2 + 1), s));
    } else if (kind == "lg" || kind == "og") {
        int N = detail::parse_int(rest, s);
        if (N < 2) throw ParseError(std::string(kind) + " needs N >= 2");
    } else {
        throw ParseError("unknown space '" + sp.tag + "'");
    }
    if (sp.ring && sp.ring->kind != RingKind::Grassmannian && sp.ring->dim_r > kMaxRingDimension)
        throw OutOfRange("rings are implemented up to dimension " + std::to_string(kMaxRingDimension));
    return sp;
}

} // namespace tevelev
