#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tevelev/complete_intersection.hpp"
#include "tevelev/vtev.hpp"

using namespace tevelev;

namespace {

Integer mm(const std::vector<int>& m) {
    Integer out = 1;
    for (int mi : m) out *= ipow(Integer(mi), static_cast<unsigned long>(mi));
    return out;
}

// Direct expansion of prod_i prod_{j=0..m_i} (j H1 + (m_i - j) H2), keyed by the H1 exponent.
std::map<int, Integer> expand_psi(const std::vector<int>& m) {
    std::map<int, Integer> poly{{0, 1}};
    for (int mi : m)
        for (int j = 0; j <= mi; ++j) {
            std::map<int, Integer> next;
            for (const auto& [e, c] : poly) {
                if (j != 0) next[e + 1] += c * j;
                if (mi - j != 0) next[e] += c * (mi - j);
            }
            poly = std::move(next);
        }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    return poly;
}

std::vector<std::vector<int>> small_degree_vectors() {
    return {{2}, {3}, {4}, {5}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 2, 2, 2}, {5, 5}, {4, 6}, {10}};
}

} // namespace

TEST(Psi, Examples) {
    EXPECT_EQ(psi_coefficients({3}), (std::map<int, Integer>{{1, 18}, {2, 45}, {3, 18}}));
    EXPECT_EQ(psi_coefficients({2}), (std::map<int, Integer>{{1, 4}, {2, 4}}));
}

TEST(Psi, AgreesWithDirectExpansion) {
    for (const auto& m : small_degree_vectors()) {
        auto psi = psi_coefficients(m);
        EXPECT_EQ(psi, expand_psi(m));
        Integer sum = 0, want = 1;
        for (const auto& [i, c] : psi) sum += c;
        for (int mi : m) want *= ipow(Integer(mi), static_cast<unsigned long>(mi + 1));
        EXPECT_EQ(sum, want);
    }
}

TEST(CiConstants, Examples) {
    EXPECT_EQ(ci_constants({3}), (std::map<int, Rational>{{1, 6}, {2, 15}, {3, 6}}));
    EXPECT_EQ(ci_constants({2}), (std::map<int, Rational>{{1, 2}, {2, 2}}));
}

TEST(CiConstants, SupportSymmetrySum) {
    for (const auto& m : small_degree_vectors()) {
        auto c = ci_constants(m);
        const int L = static_cast<int>(m.size());
        int s = 0;
        for (int mi : m) s += mi;
        Rational sum = 0;
        for (const auto& [i, ci] : c) {
            // (a) non-negative integers, supported in [L, |m|]
            EXPECT_TRUE(is_integer(ci) && ci > 0);
            EXPECT_GE(i, L);
            EXPECT_LE(i, s);
            // (b) symmetry
            auto it = c.find(L + s - i);
            ASSERT_NE(it, c.end());
            EXPECT_EQ(it->second, ci);
            sum += ci;
        }
        // (d) the constants sum to m^m
        EXPECT_EQ(sum, Rational(mm(m)));
    }
}

TEST(CiRing, PieriExamples) {
    auto Q = build_ring(3, {2});
    auto row = Q->pieri_row(3);
    ASSERT_EQ(row.size(), 1u);
    EXPECT_EQ(row.at(1), LaurentPoly::monomial(1, 2));
    auto C = build_ring(5, {3});
    auto row5 = C->pieri_row(4);
    EXPECT_EQ(row5.at(5), LaurentPoly::monomial(0, 1));
    EXPECT_EQ(row5.at(1), LaurentPoly::monomial(1, 15));
}

TEST(CiRing, TopPowerRelation) {
    // H^(r+1) = m^m q H^(|m| - L)
    for (const auto& m : small_degree_vectors()) {
        int s = 0;
        for (int mi : m) s += mi;
        const int L = static_cast<int>(m.size());
        for (int r = std::max(3, 2 * s - 2 * L - 2); r <= std::min(s + L - 1 + 4, 2 * s - 2 * L - 2 + 4); ++r) {
            RingDescriptor d;
            try {
                d = RingDescriptor::complete_intersection(r, m);
            } catch (const OutOfRange&) {
                continue;
            }
            auto R = ci_ring(d);
            QHElement H = QHElement::basis(R->ring(), PowerIndex{1});
            EXPECT_EQ(pow(H, static_cast<unsigned long>(r + 1)), QHElement::basis(R->ring(), PowerIndex{s - L}, 1, Rational(mm(m))))
                << d.name();
        }
    }
}

TEST(CiRing, PointClass) {
    auto Q = ci_ring(RingDescriptor::complete_intersection(3, {2}));
    EXPECT_EQ(Q->point_class().to_string(), "(1/2)*H^3 - q");
    for (int r = 3; r <= 8; ++r) {
        auto R = build_ring(r, {2});
        QHElement want = QHElement::basis(R->ring(), PowerIndex{r}, 0, Rational(1, 2)) - QHElement::q_power(R->ring(), 1);
        EXPECT_EQ(R->point_class(), want) << r;
    }
    auto C = build_ring(5, {3});
    EXPECT_EQ(C->point_expansion(), (std::vector<Rational>{Rational(1, 3), -7}));
    auto B = build_ring(4, {2, 2, 2});
    EXPECT_EQ(B->classical_power(4).coeff(PowerIndex{0}, 2), -32);
}

TEST(CiRing, EulerExpansion) {
    for (int r = 3; r <= 8; ++r) {
        auto R = build_ring(r, {2});
        int delta = r % 2 == 0 ? 2 : 1;
        QHElement want = QHElement::basis(R->ring(), PowerIndex{r}, 0, make_rational(r + delta, 2)) -
                         QHElement::q_power(R->ring(), 1, 2 * delta);
        EXPECT_EQ(R->euler_expansion(), want) << r;
    }
    std::vector<std::pair<int, std::vector<int>>> rings = {{5, {3}}, {4, {3}}, {6, {4}}, {4, {2, 2}}, {4, {2, 2, 2}}, {7, {5}}};
    for (const auto& [r, m] : rings) {
        auto R = build_ring(r, m);
        const auto& desc = R->descriptor();
        QHElement E = R->euler_expansion();
        EXPECT_EQ(E, R->euler_from_dual_bases()) << desc.name();
        // classical part is chi P
        EXPECT_EQ(E.coeff(PowerIndex{r}, 0), Rational(desc.euler_char) * mvec_pow(m, 0, -1));
        // H * E = (r + L + 1 - |m|) m^(m-1) q H^(|m| - L)
        const int L = desc.L, s = desc.degree_sum();
        QHElement H = QHElement::basis(R->ring(), PowerIndex{1});
        EXPECT_EQ(H * E, QHElement::basis(R->ring(), PowerIndex{s - L}, 1, Rational(r + L + 1 - s) * mvec_pow(m, 1, -1)))
            << desc.name();
    }
}

TEST(CiRing, EulerCharacteristic) {
    EXPECT_EQ(RingDescriptor::complete_intersection(3, {2}).euler_char, 4);
    EXPECT_EQ(RingDescriptor::complete_intersection(4, {2}).euler_char, 6);
    EXPECT_EQ(RingDescriptor::complete_intersection(3, {3}).euler_char, -6);
}

TEST(Discrepancy, Quadric) {
    for (int r = 3; r <= 8; ++r) {
        auto R = build_ring(r, {2});
        int delta = r % 2 == 0 ? 2 : 1;
        for (long g = 0; g <= 4; ++g)
            for (long n = 0; n <= 4; ++n) {
                if (!ci_degree(*R, g, n) || g + n < 1) continue;
                Rational want = Rational(ipow(Integer(2 * delta), static_cast<unsigned long>(g))) / 2;
                if ((n + g) % 2) want = -want;
                EXPECT_EQ(discrepancy(*R, g, n).disc, want) << r << " " << g << " " << n;
            }
    }
}

TEST(Discrepancy, VanishesInCciiRange) {
    auto C = build_ring(5, {3});
    for (long n = 0; n <= 6; ++n)
        if (ci_degree(*C, 2, n)) EXPECT_EQ(discrepancy(*C, 2, n).disc, 0);
    auto B = build_ring(4, {2, 2, 2});
    for (long n = 0; n <= 4; ++n)
        if (ci_degree(*B, 2, n)) EXPECT_EQ(discrepancy(*B, 2, n).disc, 0);
}

TEST(Ccii, Examples) {
    auto C = build_ring(5, {3});
    EXPECT_EQ(ccii_formula(*C, 1, 5, 4), 1728);
    EXPECT_EQ(vtev_ci(*C, 1, 4), 1728);
    // cubic: 2^n (r-1)^g 3^(3d - 3n - g + 1)
    for (int r = 3; r <= 6; ++r) {
        auto R = build_ring(r, {3});
        for (long g = 0; g <= 4; ++g)
            for (long n = 0; n <= 4; ++n) {
                auto d = ci_degree(*R, g, n);
                if (!d || g + n < 2) continue;
                Rational want = rpow(2, n) * rpow(r - 1, g) * rpow(3, 3 * *d - 3 * n - g + 1);
                EXPECT_EQ(ccii_formula(*R, g, *d, n), want);
                EXPECT_EQ(vtev_ci(*R, g, n), want) << r << " " << g << " " << n;
            }
    }
}

TEST(Ccii, HypersurfaceSpecialization) {
    for (int e = 3; e <= 5; ++e)
        for (int r = 2 * e - 3; r <= 2 * e; ++r) {
            auto R = build_ring(r, {e});
            for (long g = 0; g <= 3; ++g)
                for (long n = 0; n <= 4; ++n) {
                    auto d = ci_degree(*R, g, n);
                    if (!d || g + n < 2) continue;
                    Rational want =
                        rpow(Rational(factorial(e - 1)), n) * rpow(r + 2 - e, g) * rpow(e, (*d - n) * e - g + 1);
                    EXPECT_EQ(ccii_formula(*R, g, *d, n), want) << e << " " << r;
                }
        }
}

TEST(Border, Examples) {
    auto B = build_ring(4, {2, 2, 2});
    EXPECT_TRUE(B->border());
    EXPECT_EQ(border_formula(*B, 1, 2, 1), -64);
    EXPECT_EQ(vtev_ci(*B, 1, 1), -64);
    EXPECT_EQ(discrepancy(*B, 1, 1).disc, 184);
    EXPECT_EQ(tevdeg2_formula(*B, 1, 1), -64);
    for (long g = 0; g <= 3; ++g)
        for (long n = 0; n <= 4; ++n) {
            auto d = ci_degree(*B, g, n);
            if (!d || g + n < 1) continue;
            EXPECT_EQ(border_formula(*B, g, *d, n), vtev_ci(*B, g, n)) << g << " " << n;
        }
    EXPECT_THROW(border_formula(*B, 1, 3, 1), ConstraintError);
}

TEST(CiEngine, AgreesWithGenericVtev) {
    for (std::pair<int, std::vector<int>> rm : std::vector<std::pair<int, std::vector<int>>>{{4, {2, 2, 2}}, {5, {3}}, {4, {2, 2}}}) {
        auto d = RingDescriptor::complete_intersection(rm.first, rm.second);
        auto R = ci_ring(d);
        for (long g = 0; g <= 3; ++g)
            for (long n = 0; n <= 3; ++n) EXPECT_EQ(vtev(d, g, n).value, vtev_ci(*R, g, n));
    }
}

TEST(CiDescriptor, RangeChecks) {
    EXPECT_THROW(RingDescriptor::complete_intersection(4, {1}), OutOfRange);
    EXPECT_THROW(RingDescriptor::complete_intersection(3, {5}), OutOfRange);
    EXPECT_THROW(RingDescriptor::complete_intersection(3, {2, 2, 2}), OutOfRange);
}
