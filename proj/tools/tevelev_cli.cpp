// Command-line front end: vtev, euler, closed-form, table, selfcheck.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tevelev/app.hpp"
#include "tevelev/selfcheck.hpp"

using json = nlohmann::ordered_json;
using namespace tevelev;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kRange = 3 };

long default_digits() {
    if (const char* env = std::getenv("TEVELEV_DIGITS")) {
        try {
            long d = std::stol(env);
            if (d >= 16 && d <= 4096) return d;
        } catch (const std::exception&) {
        }
        throw InvalidArgument("TEVELEV_DIGITS must be an integer in 16..4096");
    }
    return 64;
}

json scalar_json(const Scalar& s, long digits) {
    if (const auto* q = std::get_if<QuadSurd>(&s)) {
        if (q->is_rational()) return to_string(q->rational());
        return json{{"rational", to_string(q->rational())},
                    {"surd_coeff", to_string(q->surd_coeff())},
                    {"radicand", q->radicand().get_str()}};
    }
    const auto& c = std::get<Complex>(s);
    if (c.im.is_zero()) return c.re.to_string(digits);
    return json{{"re", c.re.to_string(digits)}, {"im", c.im.to_string(digits)}};
}

json form_json(const ClosedForm& f) {
    json terms = json::array();
    for (const auto& t : f.terms)
        terms.push_back({{"weight", scalar_json(t.weight, f.digits)},
                         {"base", scalar_json(t.base, f.digits)},
                         {"parity", parity_name(t.parity)}});
    json j;
    j["residue"] = f.residue ? json(*f.residue) : json(nullptr);
    j["field"] = f.field();
    j["terms"] = terms;
    return j;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_vtev(const std::string& space, long g, std::optional<long> n, std::optional<long> d, long digits) {
    SpaceSpec sp = parse_space(space);
    VtevAnswer a = space_vtev(sp, g, n, d, digits);
    json j;
    j["space"] = space;
    j["g"] = g;
    j["n"] = a.n ? json(*a.n) : json(nullptr);
    if (a.d.empty()) j["d"] = d ? json(*d) : json(nullptr);
    else if (a.d.size() == 1) j["d"] = a.d[0];
    else j["d"] = a.d;
    j["value"] = a.value.text();
    if (a.value.raw) {
        j["raw"] = *a.value.raw;
        j["digits"] = digits;
    }
    if (a.reason) j["reason"] = *a.reason;
    else j["method"] = a.method;
    print(j);
    return kOk;
}

int cmd_euler(const std::string& space) {
    SpaceSpec sp = parse_space(space);
    const RingDescriptor& desc = sp.require_ring("euler");
    QHElement E = euler_class(desc);
    json terms = json::array();
    for (const auto& [lab, p] : E.terms())
        for (const auto& [e, c] : p.terms())
            terms.push_back({{"label", E.ring().label_name(lab)}, {"qpow", e}, {"coeff", to_string(c)}});
    json j;
    j["space"] = space;
    j["euler"] = E.to_string();
    j["euler_characteristic"] = desc.euler_char.get_str();
    j["terms"] = terms;
    print(j);
    return kOk;
}

int cmd_closed_form(const std::string& space, long digits) {
    SpaceSpec sp = parse_space(space);
    ClosedFormReport rep = space_closed_forms(sp, digits);
    json forms = json::array();
    for (const auto& f : rep.forms) forms.push_back(form_json(f));
    const ClosedForm& f0 = rep.forms.front();
    json j;
    j["space"] = space;
    j["source"] = rep.source;
    j["constraint"] = {{"d_q", f0.d_q}, {"dim", f0.dim}};
    j["ord_p"] = f0.ord_p;
    j["isone"] = rep.isone;
    j["digits"] = digits;
    j["forms"] = forms;
    print(j);
    return kOk;
}

int cmd_table(const std::string& space, long gmax, long digits) {
    SpaceSpec sp = parse_space(space);
    TableResult t = space_table(sp, gmax, digits);
    std::string header = "g";
    for (const auto& res : t.residues) {
        std::string suf = res ? "_res" + std::to_string(*res) : "";
        header += ",n" + suf + ",d" + suf + ",value" + suf;
    }
    std::cout << header << "\n";
    for (const auto& row : t.rows) {
        std::cout << row.g;
        for (const auto& cell : row.cells) {
            if (!cell) {
                std::cout << ",,,";
                continue;
            }
            std::string d;
            for (std::size_t i = 0; i < cell->d.size(); ++i) d += (i ? ";" : "") + std::to_string(cell->d[i]);
            std::cout << "," << cell->n << "," << d << "," << cell->value.text();
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_selfcheck(const std::vector<std::string>& only, const std::string& golden_path) {
    GoldenData gold = golden_path.empty() ? builtin_golden() : load_golden_csv(golden_path);
    auto suites = selfcheck_suites(gold);
    for (const auto& name : only) {
        bool known = false;
        for (const auto& s : suites) known = known || s.name == name;
        if (!known) throw InvalidArgument("unknown suite '" + name + "'");
    }
    bool all = true;
    for (const auto& s : suites) {
        if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end()) continue;
        SuiteResult r = run_suite(s);
        std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
        for (const auto& f : r.failures) std::cout << "  failed: " << f << "\n";
        for (const auto& f : r.findings) std::cout << "  finding: " << f << "\n";
        all = all && r.passed;
    }
    return all ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virtual Tevelev degrees from quantum cohomology"};
    app.require_subcommand(1);

    std::string space, golden;
    long genus = 0, gmax = 10;
    std::optional<long> n, d;
    long digits = 0;
    std::vector<std::string> only;

    auto* vt = app.add_subcommand("vtev", "coefficient of q^d P in P^n * E^g");
    vt->add_option("--space", space, "space, e.g. gr:2,7 or ci:4:2,2,2")->required();
    vt->add_option("--genus,-g", genus, "genus")->required()->check(CLI::NonNegativeNumber);
    vt->add_option("--n", n, "number of points");
    vt->add_option("--d", d, "degree");
    vt->add_option("--digits", digits, "decimal digits for numeric closed forms");

    auto* eu = app.add_subcommand("euler", "quantum Euler class");
    eu->add_option("--space", space)->required();

    auto* cf = app.add_subcommand("closed-form", "genus-parametric closed form");
    cf->add_option("--space", space)->required();
    cf->add_option("--digits", digits);

    auto* tb = app.add_subcommand("table", "CSV of values for g = 0..gmax");
    tb->add_option("--space", space)->required();
    tb->add_option("--gmax", gmax)->check(CLI::Range(0L, 200L));
    tb->add_option("--digits", digits);

    auto* sc = app.add_subcommand("selfcheck", "run the invariant suites");
    sc->add_option("--only", only, "run only the named suites");
    sc->add_option("--golden", golden, "CSV (space,g,value) overriding golden rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (digits == 0) digits = default_digits();
        if (digits < 16 || digits > 4096) throw InvalidArgument("--digits must lie in 16..4096");
        if (*vt) return cmd_vtev(space, genus, n, d, digits);
        if (*eu) return cmd_euler(space);
        if (*cf) return cmd_closed_form(space, digits);
        if (*tb) return cmd_table(space, gmax, digits);
        if (*sc) return cmd_selfcheck(only, golden);
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRange;
    } catch (const NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
