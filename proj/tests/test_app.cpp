#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "tevelev/app.hpp"
#include "tevelev/selfcheck.hpp"

using namespace tevelev;

TEST(Space, Grammar) {
    auto p = parse_space("p:3");
    ASSERT_TRUE(p.ring);
    EXPECT_EQ(p.ring->kind, RingKind::Projective);
    auto q = parse_space("q:5");
    EXPECT_EQ(q.ring->m_vector, std::vector<int>{2});
    EXPECT_TRUE(q.is_quadric());
    auto g = parse_space("gr:2,7");
    EXPECT_EQ(g.ring->gr_m, 2);
    EXPECT_EQ(g.ring->gr_N, 7);
    auto c = parse_space("ci:4:2,2,2");
    EXPECT_EQ(c.ring->m_vector, (std::vector<int>{2, 2, 2}));
    for (std::string s : {"lg:3", "og:6", "e6", "e7"}) EXPECT_TRUE(parse_space(s).formula_only()) << s;
    auto pr = parse_space("prod(p:1,p:1)");
    ASSERT_EQ(pr.factors.size(), 2u);
    auto mixed = parse_space("prod(gr:2,5,ci:4:2,2)");
    ASSERT_EQ(mixed.factors.size(), 2u);
    EXPECT_EQ(mixed.factors[0].tag, "gr:2,5");
    EXPECT_EQ(mixed.factors[1].tag, "ci:4:2,2");
}

TEST(Space, Errors) {
    for (std::string s : {"", "x:3", "gr:2", "gr:5,2", "p:", "p:a", "ci:3", "prod(p:1", "prod(p:1)", "lg:1"})
        EXPECT_THROW(parse_space(s), ParseError) << s;
    EXPECT_THROW(parse_space("gr:2,11"), OutOfRange);
    EXPECT_THROW(parse_space("q:2"), OutOfRange);
    EXPECT_THROW(parse_space("p:70"), OutOfRange);
    EXPECT_THROW(parse_space("lg:4").require_ring("euler"), OutOfRange);
}

TEST(App, PointOrder) {
    EXPECT_EQ(point_order(RingDescriptor::projective(3)), 4);
    EXPECT_EQ(point_order(RingDescriptor::grassmannian(2, 8)), 4);
    EXPECT_EQ(point_order(RingDescriptor::complete_intersection(5, {2})), 2);
    EXPECT_EQ(point_order(RingDescriptor::complete_intersection(5, {3})), std::nullopt);
}

TEST(App, VtevSolvesForMissingParameter) {
    auto sp = parse_space("gr:2,7");
    auto a = space_vtev(sp, 2, 6, std::nullopt);
    EXPECT_EQ(a.d, std::vector<long>{10});
    EXPECT_EQ(a.value.text(), "686");
    auto b = space_vtev(sp, 2, std::nullopt, 10);
    EXPECT_EQ(b.n, 6);
    EXPECT_EQ(b.value.text(), "686");
    auto bad = space_vtev(sp, 2, 5, std::nullopt);
    EXPECT_EQ(bad.value.text(), "0");
    EXPECT_EQ(*bad.reason, "dimension constraint unsatisfiable");
    auto inconsistent = space_vtev(sp, 2, 6, 3);
    EXPECT_TRUE(inconsistent.reason);
    EXPECT_THROW(space_vtev(sp, 2, std::nullopt, std::nullopt), InvalidArgument);
    EXPECT_EQ(space_vtev(parse_space("p:3"), 0, 1, 0).value.text(), "1");
}

TEST(App, VtevFormulaOnlyAndProducts) {
    auto e7 = space_vtev(parse_space("e7"), 2, 3, std::nullopt);
    EXPECT_EQ(e7.value.text(), "128320");
    EXPECT_EQ(e7.method, "catalog");
    EXPECT_TRUE(e7.value.raw);
    auto lg = space_vtev(parse_space("lg:3"), 1, 2, std::nullopt);
    EXPECT_EQ(lg.value.text(), "8");
    auto prod = space_vtev(parse_space("prod(p:1,p:1)"), 3, 2, std::nullopt);
    EXPECT_EQ(prod.value.text(), "64");
    EXPECT_EQ(prod.d, (std::vector<long>{2, 2}));
    EXPECT_THROW(space_vtev(parse_space("prod(p:1,p:1)"), 3, std::nullopt, 2), InvalidArgument);
}

TEST(App, ValuesRoundTrip) {
    auto v = space_vtev(parse_space("ci:4:2,2,2"), 0, 3, std::nullopt);
    ASSERT_TRUE(v.value.exact);
    EXPECT_EQ(parse_rational(v.value.text()), *v.value.exact);
    for (long g = 0; g <= 3; ++g)
        for (long n = 0; n <= 3; ++n) {
            auto a = space_vtev(parse_space("ci:5:3"), g, n, std::nullopt);
            EXPECT_EQ(parse_rational(a.value.text()), *a.value.exact);
        }
}

TEST(App, TableSingleColumn) {
    auto t = space_table(parse_space("p:1"), 4);
    ASSERT_EQ(t.residues.size(), 1u);
    ASSERT_EQ(t.rows.size(), 5u);
    for (long g = 0; g <= 4; ++g) EXPECT_EQ(t.rows[g].cells[0]->value.text(), ipow(2, static_cast<unsigned long>(g)).get_str());
}

TEST(App, TablePerResidue) {
    auto t = space_table(parse_space("gr:2,8"), 3);
    EXPECT_EQ(t.ord_p, 4);
    EXPECT_EQ(t.residues.size(), 2u);
    auto q = space_table(parse_space("q:4"), 3);
    EXPECT_EQ(q.residues.size(), 2u);
    // engine agreement per cell
    auto desc = RingDescriptor::grassmannian(2, 8);
    for (const auto& row : t.rows)
        for (const auto& cell : row.cells) {
            ASSERT_TRUE(cell);
            EXPECT_EQ(*cell->value.exact, vtev(desc, row.g, cell->n).value);
        }
}

TEST(App, TableMatchesGolden) {
    for (const auto& gt : golden_tables()) {
        auto t = space_table(parse_space(gt.space), 15);
        for (std::size_t g = 0; g < gt.rows.size(); ++g) EXPECT_EQ(t.rows[g].cells[0]->value.text(), gt.rows[g].get_str());
    }
}

TEST(App, ClosedForms) {
    auto g26 = space_closed_forms(parse_space("gr:2,6"));
    EXPECT_EQ(g26.source, "spectral");
    EXPECT_TRUE(g26.isone);
    ASSERT_EQ(g26.forms.size(), 1u);
    EXPECT_EQ(g26.forms[0].terms.size(), 3u);
    auto og = space_closed_forms(parse_space("og:6"));
    EXPECT_EQ(og.source, "catalog");
    auto g28 = space_closed_forms(parse_space("gr:2,8"));
    EXPECT_FALSE(g28.isone);
    EXPECT_EQ(g28.forms.size(), 2u);
    auto p3 = space_closed_forms(parse_space("p:3"));
    EXPECT_EQ(p3.forms[0].terms.size(), 1u);
    EXPECT_THROW(space_closed_forms(parse_space("ci:5:3")), OutOfRange);
    EXPECT_THROW(space_closed_forms(parse_space("prod(p:1,p:1)")), OutOfRange);
}

TEST(Selfcheck, SuitesAndCorruptedGolden) {
    auto suites = selfcheck_suites(builtin_golden());
    std::vector<std::string> names;
    for (const auto& s : suites) names.push_back(s.name);
    EXPECT_EQ(names, (std::vector<std::string>{"golden", "quadrics", "complete-intersections", "cylinder", "spectral",
                                               "formulas", "properties", "integrality"}));
    EXPECT_TRUE(run_suite(suites[0]).passed);

    std::string path = ::testing::TempDir() + "corrupt_golden.csv";
    {
        std::ofstream out(path);
        out << "space,g,value\ngr:2,7,3,33615\n";
    }
    auto bad = load_golden_csv(path);
    EXPECT_EQ(bad["gr:2,7"][3], 33615);
    SuiteResult r = run_suite(selfcheck_suites(bad)[0]);
    EXPECT_FALSE(r.passed);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0], "gr:2,7 g=3");
    std::remove(path.c_str());
    EXPECT_THROW(load_golden_csv("/nonexistent/golden.csv"), InvalidArgument);
}
