// g2verify: command-line driver running the verification suites and emitting
// a deterministic JSON report.
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error
// (bad q, unknown suite, or the element budget would be exceeded).

#include "CLI11.hpp"
#include "json.hpp"

#include "g2fq/chartab.hpp"
#include "g2fq/converse.hpp"
#include "g2fq/gammagl1.hpp"
#include "g2fq/gammagl2.hpp"
#include "g2fq/gauss.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

using namespace g2fq;
using Json = nlohmann::ordered_json;

namespace {

struct Config {
    int q = 3;
    std::string suite = "all";
    std::uint64_t seed = 1;
    int chi = -1;  // -1: all characters
    int tau = -1;  // -1: one irrep of each type
    double tol = 1e-8;
    std::string out;  // empty: stdout
    double budget = 5e8;
    std::uint64_t seedA = 0, seedB = 0;  // 0: derived from seed
    bool cuspidal = false;
};

struct Row {
    std::string name;
    std::string anchor;
    std::string expected;
    std::string got;
    bool pass = false;
};

class Report {
public:
    explicit Report(double tol) : tol_(tol) {}

    // numeric check: |got - expected| <= tol * max(1, |expected|)
    void num(const std::string& name, const std::string& anchor, double expected,
             double got) {
        bool ok = std::abs(got - expected) <= tol_ * std::max(1.0, std::abs(expected));
        add(name, anchor, fmt(expected), fmt(got), ok);
    }
    void count(const std::string& name, const std::string& anchor,
               long long expected, long long got) {
        add(name, anchor, std::to_string(expected), std::to_string(got),
            expected == got);
    }
    void flag(const std::string& name, const std::string& anchor, bool got,
              bool expected = true) {
        add(name, anchor, expected ? "true" : "false", got ? "true" : "false",
            got == expected);
    }
    // "max deviation" check: pass iff got <= tol * scale
    void dev(const std::string& name, const std::string& anchor, double got,
             double scale = 1.0) {
        add(name, anchor, "<=tol", fmt(got), got <= tol_ * std::max(1.0, scale));
    }

    bool all_pass() const {
        for (const Row& r : rows_)
            if (!r.pass) return false;
        return true;
    }
    const std::vector<Row>& rows() const { return rows_; }

private:
    static std::string fmt(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return buf;
    }
    void add(std::string name, std::string anchor, std::string expected,
             std::string got, bool pass) {
        rows_.push_back({std::move(name), std::move(anchor), std::move(expected),
                         std::move(got), pass});
    }

    double tol_;
    std::vector<Row> rows_;
};

long long group_order(int q) {
    long long Q = q;
    return Q * Q * Q * Q * Q * Q * (Q * Q * Q * Q * Q * Q - 1) * (Q * Q - 1);
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

void suite_chevalley(const Config& cfg, const Field& F, Report& rep) {
    G2 G(F);
    const int q = F.q();
    bool form_ok = true, add_ok = true, inv_ok = true;
    for (int g = 0; g < 12; ++g) {
        for (int r = 0; r < q; ++r) {
            const Mat7 xr = G.root_elt(g, r);
            if (!G.preserves_form(xr)) form_ok = false;
            for (int s = 0; s < q; ++s)
                if (G.mul(xr, G.root_elt(g, s)) != G.root_elt(g, F.add(r, s)))
                    add_ok = false;
            if (G.mul(xr, G.root_elt(g, F.neg(r))) != G.identity()) inv_ok = false;
        }
    }
    rep.flag("root maps preserve the form, det 1", "roots.form", form_ok);
    rep.flag("root maps are additive in the parameter", "roots.additivity", add_ok);
    rep.flag("root maps invert at the negated parameter", "roots.inverse", inv_ok);
    // Bruhat closure of torus and Weyl generators
    bool bruhat_ok = true;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (!G.in_group(G.h_elt(a, b))) bruhat_ok = false;
    for (const auto& w : G.weyl())
        if (!G.in_group(w.rep)) bruhat_ok = false;
    rep.flag("torus and Weyl representatives decompose", "bruhat.closure", bruhat_ok);
    if (q == 3 && group_order(q) <= cfg.budget)
        rep.count("full enumeration at q=3", "census.q3", group_order(3),
                  (long long)G.census());
}

void suite_weil(const Config& cfg, const Field& F, Report& rep) {
    const int q = F.q();
    WeilRep W(F, false);
    const auto sl2 = all_sl2(F);
    std::vector<JacobiElt> elts;
    for (const GL2& g : sl2)
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                for (int z = 0; z < q; ++z) elts.push_back({g, x, y, z});
    double worst = 0;
    auto check_pair = [&](const JacobiElt& u, const JacobiElt& v) {
        const Op lhs = op_mul(q, W.jacobi(u), W.jacobi(v));
        const Op rhs = W.jacobi(jacobi_mul(F, u, v));
        for (std::size_t i = 0; i < lhs.size(); ++i)
            worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    };
    if (q == 3 && (double)elts.size() * elts.size() <= cfg.budget) {
        for (const auto& u : elts)
            for (const auto& v : elts) check_pair(u, v);
        rep.dev("homomorphism, all pairs at q=3", "weil.hom.exhaustive", worst);
    } else {
        std::mt19937 rng(static_cast<std::uint32_t>(cfg.seed));
        std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
        for (int i = 0; i < 20000; ++i) check_pair(elts[pick(rng)], elts[pick(rng)]);
        rep.dev("homomorphism, sampled pairs", "weil.hom.sampled", worst);
    }
}

void suite_classes(const Config& cfg, const Field& F, Report& rep) {
    G2 G(F);
    ClassTable T = classes(F, G);
    long long total = 0;
    for (const auto& r : T.records) total += r.class_size;
    rep.count("class sizes sum to the group order", "classes.equation",
              T.group_order, total);
    bool fam_ok = true;
    for (const auto& fe : expected_families(F)) {
        long long count = 0;
        for (const auto& r : T.records)
            if (r.family == fe.family) {
                ++count;
                if (r.class_size != fe.class_size) fam_ok = false;
            }
        if (count != fe.count) fam_ok = false;
    }
    rep.flag("tabulated families: sizes and counts", "classes.families", fam_ok);
    if (F.q() == 3 && 2.0 * T.group_order * T.records.size() <= cfg.budget) {
        const std::string err = verify_classes_exhaustive(G, T);
        rep.flag("orbit enumeration at q=3: " + (err.empty() ? "clean" : err),
                 "classes.orbits", err.empty());
    }
}

void suite_gauss(const Field& F, Report& rep) {
    QuadField K(F);
    for (const SumResult& r : sum_family(F, K)) {
        const std::string label =
            "family " + r.family + ", class " + std::to_string(r.index);
        const double d = std::abs(r.diff - r.closed);
        rep.dev(label, "sums." + r.family + "." + std::to_string(r.index), d,
                std::abs(r.closed));
    }
}

void suite_pairings(const Config& cfg, const Field& F, Report& rep) {
    QuadField K(F);
    G2 G(F);
    WeilRep W(F, false);
    ClassTable T = classes(F, G);
    const bool char3 = F.p() == 3;
    std::vector<std::pair<std::string, double>> expect;
    if (char3)
        expect = {{"chi12", 1}, {"chi13", 1}, {"chi14", 1},
                  {"theta10", 0}, {"theta11", 0}, {"theta12", 0}};
    else
        expect = {{"X2", 1}, {"X3", 1}, {"X6", 1},
                  {"Y1", 0}, {"Y2", 0}, {"Y3", 0}, {"Y4", 0}};
    std::vector<int> chis;
    if (cfg.chi >= 0)
        chis.push_back(cfg.chi);
    else
        for (int c = 0; c < F.q() - 1; ++c) chis.push_back(c);

    for (const auto& [name, want] : expect) {
        double worst = 0;
        for (int chi : chis) {
            for (const auto& col : {char_column_printed(F, T, chi),
                                    char_column_direct(G, T, W, chi)})
                worst = std::max(worst,
                                 std::abs(pairing(F, K, T, name, col) - Scalar(want)));
        }
        rep.dev("multiplicity of " + name + " is " + std::to_string((int)want),
                "pairings." + name, worst);
    }
    if (char3) {
        double worst = 0;
        for (int chi : chis) {
            const Scalar want(chi == (F.q() - 1) / 2 ? 2.0 : 1.0);
            for (const auto& col : {char_column_printed(F, T, chi),
                                    char_column_direct(G, T, W, chi)})
                worst = std::max(worst, std::abs(pairing(F, K, T, "theta5", col) - want));
        }
        rep.dev("theta5 dichotomy", "pairings.theta5", worst);
    }
    double combo_worst = 0;
    for (int chi : chis)
        for (const auto& c :
             combination_checks(F, K, T, char_column_printed(F, T, chi), chi))
            combo_worst = std::max(combo_worst, std::abs(c.value - c.expected));
    rep.dev("virtual-combination pairings", "pairings.combos", combo_worst);
}

void suite_gamma_gl1(const Config& cfg, const Field& F, Report& rep) {
    G2 G(F);
    BesselLike B(G, cfg.seed);
    std::vector<int> chis;
    if (cfg.chi >= 0)
        chis.push_back(cfg.chi);
    else
        for (int c = 0; c < F.q() - 1; ++c) chis.push_back(c);
    double base_worst = 0, fe_worst = 0;
    for (int chi : chis) {
        base_worst = std::max(base_worst, std::abs(base_value(G, B, chi) - Scalar(1)));
        const Scalar fe = gamma_fe(G, B, chi);
        const Scalar cl = gamma_closed(G, B, chi);
        fe_worst = std::max(fe_worst,
                            std::abs(fe - cl) / std::max(1.0, std::abs(cl)));
    }
    rep.dev("normalized sum has value 1", "gl1.base", base_worst);
    rep.dev("functional equation matches the closed form", "gl1.gamma", fe_worst);
}

void suite_gamma_gl2(const Config& cfg, const Field& F, Report& rep) {
    QuadField K(F);
    G2 G(F);
    const int q = F.q();
    // census of the parabolic double cosets
    const CellCensus c = pw_census(G);
    rep.count("cell census totals the group order", "gl2.census", group_order(q),
              (long long)c.total);
    rep.count("large-cell size", "gl2.census.w2",
              (long long)((double)(q - 1) * (q - 1)) * (long long)std::pow(q, 6) *
                  ((long long)std::pow(q, 5) + (long long)std::pow(q, 6)),
              (long long)c.sizes[3]);

    BesselLike B(G, cfg.seed);
    std::vector<std::pair<int, Gl2Irrep>> taus;
    {
        const auto all = all_generic_gl2(F);
        if (cfg.tau >= 0 && cfg.tau < (int)all.size()) {
            taus.emplace_back(cfg.tau, all[cfg.tau]);
        } else {
            bool seen[3] = {false, false, false};
            for (int i = 0; i < (int)all.size(); ++i) {
                const int t = static_cast<int>(all[i].type);
                if (!seen[t]) {
                    seen[t] = true;
                    taus.emplace_back(i, all[i]);
                }
            }
        }
    }
    double levi_worst = 0, cell_worst = 0, gamma_worst = 0;
    for (const auto& [idx, tau] : taus) {
        Gl2Model model(F, K, tau, -1);
        Section sec(G, model, model.bessel_vector());
        const Scalar lhs = psi_pair(
            G, [&](const Mat7& g) { return B.evaluate(g); },
            [&](const Mat7& g) { return sec.eval1(g); });
        const Scalar levi = psi_levi_closed(G, B, sec);
        const Scalar cell = psi_pair_w2cells(G, B, sec);
        const Scalar cell_cl = psi_cell_closed(G, B, sec);
        levi_worst = std::max(levi_worst,
                              std::abs(lhs - levi) / std::max(1.0, std::abs(levi)));
        cell_worst = std::max(
            cell_worst, std::abs(cell - cell_cl) / std::max(1.0, std::abs(cell_cl)));
        if (std::abs(levi) > 1e-9)
            gamma_worst = std::max(
                gamma_worst, std::abs(gamma_gl2(G, B, sec) - cell_cl / levi));
    }
    rep.dev("pairing collapses to the Levi sum", "gl2.pairing.levi", levi_worst);
    rep.dev("large-cell pairing matches its closed form", "gl2.pairing.cells",
            cell_worst);
    rep.dev("gamma ratio is consistent", "gl2.gamma", gamma_worst);
}

void suite_converse(const Config& cfg, const Field& F, Report& rep) {
    const int q = F.q();
    {
        const auto d = density_check(1, q);
        rep.count("rank-one density matrix has full rank", "density.t1", d.cols,
                  d.rank);
    }
    if (q == 3) {
        const auto d = density_check(2, 3);
        rep.count("rank-two density matrix has full rank", "density.t2", d.cols,
                  d.rank);
    }
    G2 G(F);
    QuadField K(F);
    const std::uint64_t a = cfg.seedA ? cfg.seedA : cfg.seed;
    const std::uint64_t b = cfg.seedB ? cfg.seedB : cfg.seed;
    BesselLike B1(G, a), B2(G, b);
    const auto v = converse_pipeline(G, K, B1, B2, cfg.cuspidal);
    rep.flag("pipeline verdict matches the seed pair", "pipeline.verdict", v.equal,
             a == b);
    rep.flag("pipeline verdict is sound", "pipeline.sound", v.sound);
    if (a == b) {
        BesselLike C(G, b + 1);
        const auto w = converse_pipeline(G, K, B1, C, cfg.cuspidal);
        rep.flag("distinct seeds are distinguished, witness " +
                     (w.witness.empty() ? std::string("none") : w.witness),
                 "pipeline.distinct", !w.equal && !w.witness.empty());
    }
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"verification driver for the G2(F_q) toolkit"};
    app.add_option("--q", cfg.q, "odd prime power, q <= 2^16");
    app.add_option("--suite", cfg.suite,
                   "one of chevalley, weil, classes, gauss, pairings, gamma-gl1, "
                   "gamma-gl2, converse, all");
    app.add_option("--seed", cfg.seed, "seed for mock data and sampling");
    app.add_option("--chi", cfg.chi, "restrict to one multiplicative character");
    app.add_option("--tau", cfg.tau, "restrict to one rank-two irrep index");
    app.add_option("--tol", cfg.tol, "numeric tolerance");
    app.add_option("--out", cfg.out, "report path (default stdout)");
    app.add_option("--budget", cfg.budget, "element budget for enumerations");
    app.add_option("--seedA", cfg.seedA, "converse: first mock seed");
    app.add_option("--seedB", cfg.seedB, "converse: second mock seed");
    app.add_flag("--cuspidal", cfg.cuspidal, "converse: cuspidal twists only");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // validate q = p^f, p odd
    std::unique_ptr<Field> F;
    try {
        int p = cfg.q;
        for (int d = 2; d * d <= cfg.q; ++d)
            if (cfg.q % d == 0) {
                p = d;
                break;
            }
        int f = 0, m = cfg.q;
        while (m % p == 0) {
            m /= p;
            ++f;
        }
        if (m != 1) throw std::invalid_argument("q is not a prime power");
        F = std::make_unique<Field>(p, f);
    } catch (const std::exception& e) {
        std::cerr << "invalid --q " << cfg.q << ": " << e.what() << "\n";
        return 2;
    }

    static const std::vector<std::string> kSuites = {
        "chevalley", "weil", "classes", "gauss", "pairings",
        "gamma-gl1", "gamma-gl2", "converse", "all"};
    std::vector<std::string> run;
    if (cfg.suite == "all") {
        run = {"chevalley", "weil", "classes", "gauss", "pairings", "gamma-gl1"};
        if (cfg.q == 3) {
            run.push_back("gamma-gl2");
            run.push_back("converse");
        }
    } else if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) != kSuites.end()) {
        run = {cfg.suite};
    } else {
        std::cerr << "unknown suite: " << cfg.suite << "\n";
        return 2;
    }

    // budget guard for the whole-group and coset enumerations
    for (const std::string& s : run) {
        double est = 0;
        const double ord = (double)group_order(cfg.q);
        if (s == "classes") est = std::pow(cfg.q, 6.0) * (cfg.q * cfg.q - 1);
        if (s == "gamma-gl1") est = ord / std::pow(cfg.q, 4.0) * cfg.q;
        if (s == "gamma-gl2" || s == "converse")
            est = ord / std::pow(cfg.q, 4.0) * std::pow(cfg.q, 7.0);
        if (est > cfg.budget) {
            std::cerr << "suite " << s << " at q=" << cfg.q << " needs ~" << est
                      << " elements, over the budget " << cfg.budget << "\n";
            return 2;
        }
    }

    Report rep(cfg.tol);
    try {
        for (const std::string& s : run) {
            if (s == "chevalley") suite_chevalley(cfg, *F, rep);
            else if (s == "weil") suite_weil(cfg, *F, rep);
            else if (s == "classes") suite_classes(cfg, *F, rep);
            else if (s == "gauss") suite_gauss(*F, rep);
            else if (s == "pairings") suite_pairings(cfg, *F, rep);
            else if (s == "gamma-gl1") suite_gamma_gl1(cfg, *F, rep);
            else if (s == "gamma-gl2") suite_gamma_gl2(cfg, *F, rep);
            else if (s == "converse") suite_converse(cfg, *F, rep);
        }
    } catch (const std::exception& e) {
        std::cerr << "verification aborted: " << e.what() << "\n";
        return 1;
    }

    Json report;
    report["schema"] = "g2verify-report/1";
    report["config"] = {{"q", cfg.q},       {"suite", cfg.suite},
                        {"seed", cfg.seed}, {"chi", cfg.chi},
                        {"tau", cfg.tau},   {"tol", cfg.tol},
                        {"budget", cfg.budget}, {"seedA", cfg.seedA},
                        {"seedB", cfg.seedB},   {"cuspidal", cfg.cuspidal}};
    Json checks = Json::array();
    int passed = 0;
    for (const Row& r : rep.rows()) {
        checks.push_back({{"name", r.name},
                          {"anchor", r.anchor},
                          {"expected", r.expected},
                          {"got", r.got},
                          {"pass", r.pass}});
        if (r.pass) ++passed;
    }
    report["checks"] = std::move(checks);
    report["summary"] = {{"total", (int)rep.rows().size()},
                         {"passed", passed},
                         {"failed", (int)rep.rows().size() - passed}};

    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(cfg.out);
        if (!os) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return 2;
        }
        os << text;
    }
    return rep.all_pass() ? 0 : 1;
}
