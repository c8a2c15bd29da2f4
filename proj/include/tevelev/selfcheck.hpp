#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "complete_intersection.hpp"
#include "cylinder.hpp"
#include "formulas.hpp"
#include "spectral.hpp"
#include "vtev.hpp"

namespace tevelev {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::vector<std::string> failures;
    /// Noteworthy but not failures, e.g. non-integral values.
    std::vector<std::string> findings;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            passed = false;
            if (failures.size() < 20) failures.push_back(what);
        }
    }
};

/// Golden rows, keyed by space tag then genus.
using GoldenData = std::map<std::string, std::map<long, Integer>>;

inline GoldenData builtin_golden() {
    GoldenData out;
    for (const auto& t : golden_tables())
        for (std::size_t g = 0; g < t.rows.size(); ++g) out[t.space][static_cast<long>(g)] = t.rows[g];
    return out;
}

/// Reads "space,g,value" lines (header optional) over the built-in data.
inline GoldenData load_golden_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open golden file " + path);
    GoldenData out = builtin_golden();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("space", 0) == 0) continue;
        // space tags contain commas; g and value are the last two fields
        auto c2 = line.rfind(','), c1 = line.rfind(',', c2 - 1);
        if (c2 == std::string::npos || c1 == std::string::npos) throw InvalidArgument("bad golden line: " + line);
        try {
            out[line.substr(0, c1)][std::stol(line.substr(c1 + 1, c2 - c1 - 1))] = Integer(line.substr(c2 + 1));
        } catch (const std::exception&) {
            throw InvalidArgument("bad golden line: " + line);
        }
    }
    return out;
}

namespace checks {

inline std::string label(const std::string& space, long g, long n) {
    return space + " g=" + std::to_string(g) + " n=" + std::to_string(n);
}

inline void golden(SuiteResult& r, const GoldenData& gold) {
    for (const auto& [space, rows] : gold) {
        SpaceSpec sp = parse_space(space);
        TableResult t = space_table(sp, rows.rbegin()->first);
        for (const auto& [g, want] : rows) {
            const auto& cell = t.rows[static_cast<std::size_t>(g)].cells[0];
            r.expect(cell && (cell->value.exact ? *cell->value.exact == Rational(want) : cell->value.rounded == want),
                     space + " g=" + std::to_string(g));
        }
    }
}

inline void quadrics(SuiteResult& r) {
    for (int q = 3; q <= 8; ++q) {
        auto desc = RingDescriptor::complete_intersection(q, {2});
        ClosedForm f = quadric_formula(q);
        for (long g = 0; g <= 6; ++g)
            for (long n = 0; n <= 4; ++n) {
                auto v = vtev(desc, g, n);
                if (!v.d || g + n < 1) continue;
                r.expect(*evaluate_formula(f, g, *v.d, n).exact == v.value, label("q:" + std::to_string(q), g, n));
            }
    }
}

inline void complete_intersections(SuiteResult& r) {
    std::vector<std::pair<int, std::vector<int>>> panel;
    for (int e = 3; e <= 5; ++e)
        for (int q = 2 * e - 3; q <= 2 * e; ++q) panel.push_back({q, {e}});
    for (int q = 3; q <= 6; ++q) panel.push_back({q, {2, 2}});
    for (const auto& [q, m] : panel) {
        auto R = build_ring(q, m);
        for (long g = 0; g <= 4; ++g)
            for (long n = 0; n <= 4; ++n) {
                auto d = ci_degree(*R, g, n);
                if (!d || g + n < 2) continue;
                r.expect(vtev_ci(*R, g, n) == ccii_formula(*R, g, *d, n), label(R->descriptor().name(), g, n));
            }
    }
    auto B = build_ring(4, {2, 2, 2});
    r.expect(vtev_ci(*B, 1, 1) == -64, "ci:4:2,2,2 g=1 n=1");
    for (long g = 0; g <= 3; ++g)
        for (long n = 0; n <= 4; ++n) {
            auto d = ci_degree(*B, g, n);
            if (!d || g + n < 1) continue;
            r.expect(vtev_ci(*B, g, n) == border_formula(*B, g, *d, n), label("ci:4:2,2,2", g, n));
        }
}

inline void cylinder(SuiteResult& r) {
    for (int N = 2; N <= 8; ++N)
        for (int m = 1; m < N; ++m) {
            auto R = grassmannian(m, N);
            QHElement E = euler_class_grassmann(R);
            for (auto [d, k] : admissible_seidel_labels(*R)) {
                Integer paths = count_fixed_paths(*R, d, k);
                Integer parts = count_fixed_partitions(*R, d, k);
                Monomial lab = seidel_multiply(*R, {d, Partition{}}, k);
                Rational coeff = E.coeff(lab.shape, lab.qpow);
                long c = std::gcd(d, static_cast<long>(m));
                Integer binom = binomial(c * N / m, c);
                r.expect(paths == parts && paths == binom && coeff == Rational(binom),
                         "gr:" + std::to_string(m) + "," + std::to_string(N) + " d=" + std::to_string(d) +
                             " k=" + std::to_string(k));
            }
        }
}

inline void spectral(SuiteResult& r) {
    for (int N = 2; N <= 7; ++N)
        for (int m = 1; m < N; ++m) {
            auto R = grassmannian(m, N);
            SpectralData s = spectral_data(R, 64);
            const std::string tag = "gr:" + std::to_string(m) + "," + std::to_string(N);
            r.expect(is_symmetric(s.matrix), tag + " symmetric");
            auto desc = RingDescriptor::grassmannian(m, N);
            for (long res : admissible_residues(*R)) {
                ClosedForm f = synthesize_closed_form(s, res);
                for (long g = 0; g <= 8; ++g)
                    for (long n = 0; n < 2 * N; ++n) {
                        if (f.residue && floor_mod(n + g, f.ord_p) != *f.residue) continue;
                        auto v = vtev(desc, g, n);
                        if (!v.d) continue;
                        FormulaValue fv = evaluate_formula(f, g, *v.d, n);
                        bool ok;
                        if (fv.exact) {
                            ok = *fv.exact == v.value;
                        } else {
                            BigFloat want(v.value, fv.numeric.re.precision());
                            ok = abs(fv.numeric.re - want) <= abs(want) * BigFloat::pow2(-67, 64);
                        }
                        r.expect(ok, label(tag, g, n));
                    }
            }
        }
    for (int N = 2; N <= 8; ++N)
        for (int m = 1; m < N; ++m) {
            SpectralData s = spectral_matrix(grassmannian(m, N));
            Poly sqf = s.charpoly.monic() / gcd(s.charpoly, s.charpoly.derivative());
            r.expect(is_symmetric(s.matrix) && count_real_roots(sqf) == sqf.degree(),
                     "real spectrum gr:" + std::to_string(m) + "," + std::to_string(N));
        }
}

inline void formulas(SuiteResult& r) {
    for (const auto& f : formula_catalog(64)) {
        for (long n = 0; n <= 30; ++n) {
            long num = f.dim * (n - 1);
            if (num < 0 || num % f.d_q != 0 || floor_mod(n, f.ord_p) != 1) continue;
            FormulaValue v = evaluate_formula(f, 0, num / f.d_q, n);
            r.expect(v.rounded == 1 && v.distance < BigFloat::pow2(-33, 64), f.space + " genus 0");
        }
    }
    // genus-one theorems against the genus-parametric displays
    for (std::string tag : {"lg:3", "lg:4", "lg:5", "og:4", "og:5", "og:6", "e6", "e7"}) {
        ClosedForm f = *catalog_formula(tag);
        for (long n = 0; n <= 12; ++n) {
            if ((f.dim * n) % f.d_q != 0) continue;
            long d = f.dim * n / f.d_q;
            Integer want;
            try {
                want = genus_one_catalog(tag, n);
            } catch (const ConstraintError&) {
                r.expect(false, tag + " genus-one branch inadmissible at admissible n=" + std::to_string(n));
                continue;
            }
            r.expect(evaluate_formula(f, 1, d, n).rounded == want, tag + " genus 1 n=" + std::to_string(n));
        }
    }
    for (std::string tag : {"gr:2,5", "gr:2,6", "gr:3,6", "gr:2,8", "gr:3,8", "gr:4,8"}) {
        ClosedForm f = *catalog_formula(tag);
        auto desc = parse_space(tag).ring.value();
        for (long g = 0; g <= 8; ++g)
            for (long n = 0; n <= 8; ++n) {
                auto v = vtev(desc, g, n);
                if (!v.d) continue;
                auto fv = evaluate_formula(f, g, *v.d, n);
                r.expect(fv.exact && *fv.exact == v.value, label(tag, g, n));
            }
    }
}

inline void properties(SuiteResult& r) {
    // periodicity in n mod ord(P)
    for (int N = 2; N <= 7; ++N)
        for (int m = 1; m < N; ++m) {
            auto desc = RingDescriptor::grassmannian(m, N);
            const long ord = N / std::gcd(m, N);
            for (long g = 0; g <= 3; ++g)
                for (long n = 0; n <= ord; ++n) {
                    auto a = vtev(desc, g, n), b = vtev(desc, g, n + ord);
                    if (!a.d || !b.d) continue;
                    r.expect(a.value == b.value, "periodicity " + label(desc.name(), g, n));
                }
        }
    // genus-one binomial formula
    for (int N = 2; N <= 7; ++N)
        for (int m = 1; m < N; ++m) {
            auto R = grassmannian(m, N);
            auto desc = RingDescriptor::grassmannian(m, N);
            for (long n = 0; n <= 12; ++n) {
                auto v = vtev(desc, 1, n);
                if (!v.d || *v.d > 12) continue;
                r.expect(v.value == Rational(genus_one_formula(*R, *v.d, n)), "genus one " + label(desc.name(), 1, n));
            }
        }
    // product rule
    auto p1 = RingDescriptor::projective(1);
    for (long g = 0; g <= 6; ++g) {
        long n = g % 2 == 0 ? 1 : 0;
        r.expect(vtev_product(std::vector<RingDescriptor>{p1, p1}, g, n) == Rational(ipow(4, static_cast<unsigned long>(g))),
                 "P1xP1 g=" + std::to_string(g));
    }
}

inline void integrality(SuiteResult& r) {
    for (int N = 2; N <= 7; ++N)
        for (int m = 1; m < N; ++m) {
            auto desc = RingDescriptor::grassmannian(m, N);
            const long ord = N / std::gcd(m, N);
            for (long g = 0; g <= 3; ++g)
                for (long n = 0; n < ord; ++n) {
                    QHElement x = tevelev_product(desc, g, n);
                    bool ok = true;
                    for (const auto& [lab, p] : x.terms())
                        for (const auto& [e, c] : p.terms()) ok = ok && is_integer(c) && c >= 0;
                    r.expect(ok, "non-negative integral " + label(desc.name(), g, n));
                }
        }
    // integrality of complete intersection values is not guaranteed; record
    auto B = build_ring(4, {2, 2, 2});
    for (long g = 0; g <= 3; ++g)
        for (long n = 0; n <= 3; ++n) {
            Rational v = vtev_ci(*B, g, n);
            if (!is_integer(v)) r.findings.push_back("non-integral vTev " + label("ci:4:2,2,2", g, n) + " = " + to_string(v));
        }
}

} // namespace checks

struct Suite {
    std::string name;
    std::function<void(SuiteResult&)> run;
};

inline std::vector<Suite> selfcheck_suites(const GoldenData& gold) {
    return {
        {"golden", [gold](SuiteResult& r) { checks::golden(r, gold); }},
        {"quadrics", checks::quadrics},
        {"complete-intersections", checks::complete_intersections},
        {"cylinder", checks::cylinder},
        {"spectral", checks::spectral},
        {"formulas", checks::formulas},
        {"properties", checks::properties},
        {"integrality", checks::integrality},
    };
}

inline SuiteResult run_suite(const Suite& s) {
    SuiteResult r;
    r.name = s.name;
    try {
        s.run(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.failures.push_back(std::string("exception: ") + e.what());
    }
    return r;
}

} // namespace tevelev
