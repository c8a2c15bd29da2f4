#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "closed_form.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "surd.hpp"

namespace tevelev {

namespace detail {

inline QuadSurd qs(const Rational& a, const Rational& b = 0, long k = 1) { return QuadSurd(a, b, Integer(k)); }

inline ClosedForm make_form(std::string space, long d_q, long dim, long ord) {
    ClosedForm f;
    f.space = std::move(space);
    f.d_q = d_q;
    f.dim = dim;
    f.ord_p = ord;
    f.source = "catalog";
    return f;
}

/// (c * (x + y sqrt k) / den) * (u + v sqrt k)^g, with the conjugate term
/// alongside: the shape of every quadratic pair in the catalog.
inline void add_conjugate_pair(ClosedForm& f, Rational x, Rational y, Rational den, Rational u, Rational v, long k,
                               Parity par = Parity::None) {
    f.terms.push_back({qs(x / den, y / den, k), qs(u, v, k), par});
    f.terms.push_back({qs(x / den, -y / den, k), qs(u, -v, k), par});
}

inline void add_rational(ClosedForm& f, Rational w, Rational base, Parity par = Parity::None) {
    f.terms.push_back({qs(w), qs(base), par});
}

/// x + y i sqrt 3, as transcribed.
struct GaussSurd3 {
    long long x;
    long long y;
};

// a1..a7, b1..b7
inline constexpr std::array<GaussSurd3, 7> e7_a{{{1918858850LL, 156498345LL},
                                                 {363365382LL, 26312126LL},
                                                 {10129587384LL, 919199848LL},
                                                 {142214502LL, 194838754LL},
                                                 {-6443593464LL, 4605193768LL},
                                                 {-221150880LL, 168526628LL},
                                                 {3685993920LL, 5524393616LL}}};
inline constexpr std::array<GaussSurd3, 7> e7_b{{{740581002120LL, 60400326564LL},
                                                 {140247740712LL, 10153341360LL},
                                                 {3909674626464LL, 354845016000LL},
                                                 {54893858316LL, 75200541036LL},
                                                 {-2487104837232LL, 1777414805232LL},
                                                 {-85353882396LL, 65047199676LL},
                                                 {1422569789232LL, 2132259821232LL}}};

inline Complex gauss_value(const GaussSurd3& c, mpfr_prec_t bits) {
    BigFloat s3 = sqrt(BigFloat(3L, bits));
    return {BigFloat(Integer(std::to_string(c.x)), bits), BigFloat(Integer(std::to_string(c.y)), bits) * s3};
}

inline Complex real(long v, mpfr_prec_t bits) { return {BigFloat(v, bits), BigFloat(0L, bits)}; }
inline Complex real(const BigFloat& v) { return {v, BigFloat(0L, v.precision())}; }

inline std::vector<ClosedFormTerm> e7_terms(long digits) {
    const mpfr_prec_t bits = working_bits(digits);
    const BigFloat s3 = sqrt(BigFloat(3L, bits));
    // zeta = cbrt(148 + 4 i sqrt 3) in the first quadrant
    const BigFloat re0(148L, bits), im0 = BigFloat(4L, bits) * s3;
    const BigFloat rad = cbrt(sqrt(re0 * re0 + im0 * im0));
    const BigFloat th = atan2(im0, re0) / BigFloat(3L, bits);
    const Complex zeta{rad * cos(th), rad * sin(th)};
    const Complex zi = real(1, bits) / zeta;
    const BigFloat phi = atan(s3 / BigFloat(37L, bits)) / BigFloat(3L, bits);
    const BigFloat alpha = BigFloat(864L, bits) * sqrt(BigFloat(7L, bits)) * cos(phi);
    const BigFloat beta = BigFloat(864L, bits) * sqrt(BigFloat(21L, bits)) * sin(phi);

    auto a = [&](int i) { return gauss_value(e7_a[static_cast<std::size_t>(i - 1)], bits); };
    auto b = [&](int i) { return gauss_value(e7_b[static_cast<std::size_t>(i - 1)], bits); };

    std::vector<ClosedFormTerm> t;
    t.push_back({real(BigFloat(Rational(1, 4), bits)), real(8, bits), Parity::None});
    t.push_back({(a(1) + a(2) * zeta + a(3) * zi) / (b(1) + b(2) * zeta + b(3) * zi),
                 real(2376, bits) + real(432, bits) * zeta + real(12096, bits) * zi, Parity::None});
    t.push_back({(a(1) - a(4) * zeta + a(5) * zi) / (b(1) - b(4) * zeta + b(5) * zi),
                 real(BigFloat(2376L, bits) - alpha + beta), Parity::None});
    t.push_back({(a(1) + a(6) * zeta - a(7) * zi) / (b(1) + b(6) * zeta - b(7) * zi),
                 real(BigFloat(2376L, bits) - alpha - beta), Parity::None});
    return t;
}

} // namespace detail

inline constexpr long kVerifyDigits = 96;

/// P^r: (r+1)^g.
inline ClosedForm projective_formula(long r) {
    if (r < 1) throw InvalidArgument("projective space needs r >= 1");
    ClosedForm f = detail::make_form("p:" + std::to_string(r), r + 1, r, r + 1);
    detail::add_rational(f, 1, r + 1);
    return f;
}

/// Q^r: ((2r)^g + (-1)^d (2 delta)^g) / 2 with delta = 1 for odd r, 2 for even r.
inline ClosedForm quadric_formula(long r) {
    if (r < 3) throw OutOfRange("quadric formula covers r >= 3");
    ClosedForm f = detail::make_form("q:" + std::to_string(r), r, r, 2);
    const long delta = r % 2 ? 1 : 2;
    detail::add_rational(f, Rational(1, 2), 2 * r);
    detail::add_rational(f, Rational(1, 2), 2 * delta, Parity::PowD);
    return f;
}

/// Entry for a catalog tag: p:<r>, q:<r>, gr:<m>,<N>, lg:<N>, og:<N>, e6, e7.
inline std::optional<ClosedForm> catalog_formula(const std::string& tag, long digits = 64) {
    using detail::add_conjugate_pair;
    using detail::add_rational;
    using detail::make_form;
    std::optional<ClosedForm> out;
    auto starts = [&](const char* p) { return tag.rfind(p, 0) == 0; };
    if (starts("p:")) out = projective_formula(std::stol(tag.substr(2)));
    else if (starts("q:")) out = quadric_formula(std::stol(tag.substr(2)));
    else if (tag == "gr:2,5") {
        ClosedForm f = make_form(tag, 5, 6, 5);
        add_conjugate_pair(f, 5, -1, 10, Rational(25, 2), Rational(5, 2), 5);
        out = f;
    } else if (tag == "gr:2,6") {
        ClosedForm f = make_form(tag, 6, 8, 3);
        add_rational(f, Rational(1, 6), 36);
        add_rational(f, Rational(1, 2), 12);
        add_rational(f, Rational(1, 3), 9);
        out = f;
    } else if (tag == "gr:3,6") {
        ClosedForm f = make_form(tag, 6, 9, 2);
        add_rational(f, Rational(1, 12), 72);
        add_rational(f, Rational(2, 3), 18);
        add_rational(f, Rational(1, 4), 8);
        out = f;
    } else if (tag == "gr:2,8") {
        ClosedForm f = make_form(tag, 8, 12, 4);
        add_conjugate_pair(f, 2, -1, 8, 64, 32, 2);
        add_rational(f, Rational(1, 4), 32, Parity::PowD);
        add_rational(f, Rational(1, 4), 16, Parity::PowD);
        out = f;
    } else if (tag == "gr:3,8") {
        ClosedForm f = make_form(tag, 8, 15, 8);
        add_conjugate_pair(f, 3, -2, 16, 384, 256, 2);
        add_rational(f, Rational(1, 8), 128);
        add_rational(f, Rational(1, 4), 64);
        add_rational(f, Rational(1, 4), 32);
        out = f;
    } else if (tag == "gr:4,8") {
        ClosedForm f = make_form(tag, 8, 16, 2);
        add_conjugate_pair(f, 3, -2, 32, 768, 512, 2);
        add_rational(f, Rational(1, 8), 128);
        add_rational(f, Rational(1, 16), 64);
        add_rational(f, Rational(1, 8), 16);
        add_conjugate_pair(f, 2, -1, 8, 128, 64, 2, Parity::PowHalfD);
        out = f;
    } else if (tag == "lg:3") {
        ClosedForm f = make_form(tag, 4, 6, 2);
        add_conjugate_pair(f, 2, -1, 4, 16, 8, 2);
        out = f;
    } else if (tag == "lg:4") {
        ClosedForm f = make_form(tag, 5, 10, 2);
        add_conjugate_pair(f, 5, -2, 20, 100, 40, 5);
        add_rational(f, Rational(1, 4), 20, Parity::PowHalfD);
        add_rational(f, Rational(1, 4), 4, Parity::PowHalfD);
        out = f;
    } else if (tag == "lg:5") {
        ClosedForm f = make_form(tag, 6, 15, 2);
        add_conjugate_pair(f, 7, -4, 24, 1008, 576, 3);
        add_rational(f, Rational(1, 24), 144);
        add_rational(f, Rational(1, 4), 48);
        add_rational(f, Rational(1, 8), 16);
        out = f;
    } else if (tag == "og:4") {
        ClosedForm f = make_form(tag, 6, 6, 2);
        add_rational(f, Rational(1, 2), 12);
        add_rational(f, Rational(1, 2), 4, Parity::PowD);
        out = f;
    } else if (tag == "og:5") {
        ClosedForm f = make_form(tag, 8, 10, 4);
        add_conjugate_pair(f, 2, -1, 4, 32, 16, 2);
        out = f;
    } else if (tag == "og:6") {
        ClosedForm f = make_form(tag, 10, 15, 2);
        add_conjugate_pair(f, 5, -2, 20, 200, 80, 5);
        add_rational(f, Rational(1, 4), 40);
        add_rational(f, Rational(1, 4), 8);
        out = f;
    } else if (tag == "e6") {
        ClosedForm f = make_form(tag, 12, 16, 3);
        add_conjugate_pair(f, 2, -1, 6, 144, 72, 3);
        add_rational(f, Rational(1, 3), 9);
        out = f;
    } else if (tag == "e7") {
        ClosedForm f = make_form(tag, 18, 27, 2);
        f.terms = detail::e7_terms(digits);
        f.rebuild = detail::e7_terms;
        out = f;
    }
    if (out) out->digits = digits;
    return out;
}

/// Tags of the catalog; P^r and Q^r appear once each as families.
inline std::vector<std::string> catalog_tags() {
    return {"p:r",  "q:r",  "gr:2,5", "gr:2,6", "gr:3,6", "gr:2,8", "gr:3,8", "gr:4,8",
            "lg:3", "lg:4", "lg:5",   "og:4",   "og:5",   "og:6",   "e6",     "e7"};
}

/// Every catalog entry, with the P^r and Q^r families instantiated at r.
inline std::vector<ClosedForm> formula_catalog(long digits = 64, long r = 3) {
    std::vector<ClosedForm> out;
    for (const auto& tag : catalog_tags()) {
        std::string t = tag;
        if (tag == "p:r") t = "p:" + std::to_string(r);
        if (tag == "q:r") t = "q:" + std::to_string(r);
        out.push_back(*catalog_formula(t, digits));
    }
    return out;
}

/// Numeric evaluation repeated at kVerifyDigits; the two real parts must
/// agree to 30 significant digits.
inline FormulaValue evaluate_checked(const std::string& tag, long g, long d, long n, long digits = 64) {
    auto f = catalog_formula(tag, digits);
    if (!f) throw InvalidArgument("no catalog formula for " + tag);
    FormulaValue v = evaluate_formula(*f, g, d, n);
    if (v.exact) return v;
    FormulaValue w = evaluate_formula(*catalog_formula(tag, std::max(digits, kVerifyDigits) + 32), g, d, n);
    BigFloat diff = abs(v.numeric.re - w.numeric.re);
    BigFloat scale = std::max(abs(w.numeric.re), BigFloat(1L, w.numeric.re.precision()));
    if (diff / scale > BigFloat::pow2(-100, 128)) throw NumericalFailure("precision check failed for " + tag);
    return v;
}

/// Genus-one values from the Seidel-class counts.
inline Integer genus_one_catalog(const std::string& tag, long n) {
    if (n < 0) throw ConstraintError("n must be non-negative");
    auto lg_og = [&](char kind, long N) -> Integer {
        if (kind == 'l') {
            // 2 d = n N
            if ((n * N) % 2 != 0) throw ConstraintError("branch inadmissible: 2d = nN has no solution");
            if (n % 2 == 0) return ipow(2, static_cast<unsigned long>(N));
            return ipow(2, static_cast<unsigned long>(N / 2));
        }
        // 4 d = n N
        if ((n * N) % 4 != 0) throw ConstraintError("branch inadmissible: 4d = nN has no solution");
        if (n % 2 == 0) return ipow(2, static_cast<unsigned long>(N - 1));
        return ipow(2, static_cast<unsigned long>(N / 2));
    };
    if (tag.rfind("lg:", 0) == 0) return lg_og('l', std::stol(tag.substr(3)));
    if (tag.rfind("og:", 0) == 0) return lg_og('o', std::stol(tag.substr(3)));
    if (tag == "e6") {
        if ((4 * n) % 3 != 0) throw ConstraintError("branch inadmissible: 3d = 4n has no solution");
        return 27;
    }
    if (tag == "e7") {
        if ((3 * n) % 2 != 0) throw ConstraintError("branch inadmissible: 2d = 3n has no solution");
        return 56;
    }
    throw InvalidArgument("no genus-one entry for " + tag);
}

/// Quantum Euler classes of the two exceptional spaces, kept as text only.
inline constexpr const char* kE6EulerDisplay = "27 P + 27 q[X^{s2 s4 s5 s6}] + 45 q[X^{s3 s4 s5 s6}]";
inline constexpr const char* kE7EulerDisplay =
    "56 P + 160 q[X^{s6 s5 u}] + 272 q[X^{s5 s1 u}] + 160 q[X^{s3 s1 u}], u = s4 s3 s2 s4 s5 s6 s7";

struct GoldenTable {
    std::string space;
    std::vector<Integer> rows;
};

inline std::vector<GoldenTable> golden_tables() {
    auto mk = [](std::string space, std::vector<const char*> v) {
        GoldenTable t{std::move(space), {}};
        for (const char* s : v) t.rows.emplace_back(s);
        return t;
    };
    return {
        mk("gr:2,7", {"1", "21", "686", "33614", "2000033", "126825622", "8191782221", "531900893867",
                      "34589376715299", "2250344155712982", "146424292089662006", "9527847961374037099",
                      "619985909132445247770", "40343209216871520541603", "2625182876113221414704217",
                      "170823979704176185099894853"}),
        mk("gr:3,7", {"1", "35", "2744", "470596", "107884133", "26310551764", "6491563697269",
                      "1605160235412769", "397071802007102691", "98232421880349925476",
                      "24302307748473316398284", "6012312236720159623681561", "1487427484539611374221472752",
                      "367985011574983125611827761985", "91038368842060169714846533326833",
                      "22522614725296806700134311109583811"}),
        mk("e7", {"1", "56", "128320", "869201408", "6035673223168", "41931214470742016", "291308765400165253120",
                  "2023810102768684733825024", "14060020975152452459315593216",
                  "97679218802247250296546711830528", "678607080508699448610546779756167168",
                  "4714488663641616811439032212948871282688", "32752978856253489427845306031022643827703808",
                  "227544851731504006840105249380606108740637163520",
                  "1580822916191834644483662867101537620104827373617152",
                  "10982454990043024221511165369579640911620064101974147072"}),
    };
}

} // namespace tevelev
