// Acceptance run: ten end-to-end criteria, one pass/fail line each, with the
// tolerances and time budgets pinned in the output.  Exit code 0 only when
// every criterion passes.

#include "g2fq/chartab.hpp"
#include "g2fq/converse.hpp"
#include "g2fq/gammagl1.hpp"
#include "g2fq/gammagl2.hpp"
#include "g2fq/gauss.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace g2fq;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void worst(double& acc, double v) { acc = std::max(acc, v); }
};

std::vector<Scalar> apply_op(int n, const std::vector<Scalar>& m,
                             const std::vector<Scalar>& v) {
    std::vector<Scalar> out(n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
    return out;
}

Field field_for(int q) {
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int f = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++f;
    }
    return Field(p, f);
}

// --------------------------------------------------------------------------
// 1. validity of the one-parameter generators, q in {3,5,7,9}, exact
// --------------------------------------------------------------------------
Outcome crit1() {
    Outcome o;
    for (int q : {3, 5, 7, 9}) {
        Field F = field_for(q);
        G2 G(F);
        for (int g = 0; g < 12 && o.ok; ++g)
            for (int r = 0; r < q && o.ok; ++r) {
                const Mat7 xr = G.root_elt(g, r);
                o.require(G.preserves_form(xr),
                          "form/det at root " + std::to_string(g));
                for (int s = 0; s < q; ++s)
                    o.require(G.mul(xr, G.root_elt(g, s)) ==
                                  G.root_elt(g, F.add(r, s)),
                              "additivity at root " + std::to_string(g));
            }
        for (int g : {rA, rB})
            for (int t = 1; t < q; ++t)
                o.require(G.preserves_form(G.weyl_gen(g, t)),
                          "Weyl generator form at q=" + std::to_string(q));
    }
    return o;
}

// --------------------------------------------------------------------------
// 2. census at q = 3: enumeration and the cell-size formula agree
// --------------------------------------------------------------------------
Outcome crit2() {
    Outcome o;
    Field F(3, 1);
    G2 G(F);
    const int q = 3;
    long long formula = 0;
    for (const auto& w : G.weyl()) {
        long long cell = 1;
        for (int l = 0; l < w.length; ++l) cell *= q;
        formula += cell;
    }
    formula *= (long long)(q - 1) * (q - 1) * q * q * q * q * q * q;
    o.require(formula == 4245696, "cell-size formula");
    o.require((long long)G.census() == 4245696, "direct enumeration");
    return o;
}

// --------------------------------------------------------------------------
// 3. Weil representation is a homomorphism; exhaustive q=3, sampled q=5
// --------------------------------------------------------------------------
Outcome crit3() {
    Outcome o;
    double worst = 0;
    {
        Field F(3, 1);
        const int q = 3;
        WeilRep W(F, false);
        std::vector<JacobiElt> elts;
        std::vector<Op> ops;
        for (const GL2& g : all_sl2(F))
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y)
                    for (int z = 0; z < q; ++z) {
                        elts.push_back({g, x, y, z});
                        ops.push_back(W.jacobi(elts.back()));
                    }
        for (std::size_t i = 0; i < elts.size(); ++i)
            for (std::size_t j = 0; j < elts.size(); ++j) {
                const Op lhs = op_mul(q, ops[i], ops[j]);
                const Op rhs = W.jacobi(jacobi_mul(F, elts[i], elts[j]));
                for (std::size_t k = 0; k < lhs.size(); ++k)
                    o.worst(worst, std::abs(lhs[k] - rhs[k]));
            }
    }
    {
        Field F(5, 1);
        const int q = 5;
        WeilRep W(F, false);
        const auto sl2 = all_sl2(F);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> dg(0, (int)sl2.size() - 1), dv(0, q - 1);
        for (int t = 0; t < 100000; ++t) {
            const JacobiElt u{sl2[dg(rng)], dv(rng), dv(rng), dv(rng)};
            const JacobiElt v{sl2[dg(rng)], dv(rng), dv(rng), dv(rng)};
            const Op lhs = op_mul(q, W.jacobi(u), W.jacobi(v));
            const Op rhs = W.jacobi(jacobi_mul(F, u, v));
            for (std::size_t k = 0; k < lhs.size(); ++k)
                o.worst(worst, std::abs(lhs[k] - rhs[k]));
        }
    }
    o.require(worst < 1e-9, "worst deviation " + std::to_string(worst));
    return o;
}

// --------------------------------------------------------------------------
// 4. Jacobi class data: class equation for q in {3,5,7,9}; orbits at q=3
// --------------------------------------------------------------------------
Outcome crit4() {
    Outcome o;
    for (int q : {3, 5, 7, 9}) {
        Field F = field_for(q);
        G2 G(F);
        ClassTable T = classes(F, G);
        long long total = 0;
        for (const auto& r : T.records) total += r.class_size;
        long long expect = 1;
        for (int i = 0; i < 6; ++i) expect *= q;
        expect *= (long long)q * q - 1;
        o.require(total == expect && T.group_order == expect,
                  "class equation at q=" + std::to_string(q));
        if (q == 3) {
            const std::string err = verify_classes_exhaustive(G, T);
            o.require(err.empty(), "orbit check: " + err);
        }
    }
    return o;
}

// --------------------------------------------------------------------------
// 5. character column: direct traces match the printed formulas, q in {3,5}
// --------------------------------------------------------------------------
Outcome crit5() {
    Outcome o;
    double worst = 0;
    for (int q : {3, 5}) {
        Field F(q, 1);
        G2 G(F);
        WeilRep W(F, false);
        ClassTable T = classes(F, G);
        for (int chi = 0; chi < q - 1; ++chi) {
            const auto direct = char_column_direct(G, T, W, chi);
            const auto printed = char_column_printed(F, T, chi);
            for (std::size_t i = 0; i < direct.size(); ++i)
                o.worst(worst, std::abs(direct[i] - printed[i]));
        }
    }
    o.require(worst < 1e-8, "worst deviation " + std::to_string(worst));
    return o;
}

// --------------------------------------------------------------------------
// 6. character-sum closed forms across the three stratifications
// --------------------------------------------------------------------------
Outcome crit6() {
    Outcome o;
    double worst = 0;
    for (int q : {3, 5, 7, 9, 11, 13, 27}) {
        Field F = field_for(q);
        QuadField K(F);
        for (const SumResult& r : sum_family(F, K))
            o.worst(worst, std::abs(r.diff - r.closed));
    }
    o.require(worst < 1e-8, "worst deviation " + std::to_string(worst));
    return o;
}

// --------------------------------------------------------------------------
// 7. multiplicity-one pairings and the dichotomies
// --------------------------------------------------------------------------
Outcome crit7() {
    Outcome o;
    double worst = 0;
    for (int q : {5, 7}) {
        Field F(q, 1);
        QuadField K(F);
        G2 G(F);
        WeilRep W(F, false);
        ClassTable T = classes(F, G);
        for (int chi = 0; chi < q - 1; ++chi) {
            for (const auto& col : {char_column_printed(F, T, chi),
                                    char_column_direct(G, T, W, chi)}) {
                for (const char* n : {"X2", "X3", "X6"})
                    o.worst(worst, std::abs(pairing(F, K, T, n, col) - Scalar(1)));
                for (const char* n : {"Y1", "Y2", "Y3", "Y4"})
                    o.worst(worst, std::abs(pairing(F, K, T, n, col)));
            }
            for (const auto& c :
                 combination_checks(F, K, T, char_column_printed(F, T, chi), chi))
                o.worst(worst, std::abs(c.value - c.expected));
        }
    }
    {
        Field F(3, 1);
        QuadField K(F);
        G2 G(F);
        WeilRep W(F, false);
        ClassTable T = classes(F, G);
        for (int chi = 0; chi < 2; ++chi) {
            const Scalar want5(chi == 1 ? 2.0 : 1.0);
            for (const auto& col : {char_column_printed(F, T, chi),
                                    char_column_direct(G, T, W, chi)}) {
                for (const char* n : {"chi12", "chi13", "chi14"})
                    o.worst(worst, std::abs(pairing(F, K, T, n, col) - Scalar(1)));
                for (const char* n : {"theta10", "theta11", "theta12"})
                    o.worst(worst, std::abs(pairing(F, K, T, n, col)));
                o.worst(worst, std::abs(pairing(F, K, T, "theta5", col) - want5));
            }
        }
    }
    o.require(worst < 1e-6, "worst deviation " + std::to_string(worst));
    return o;
}

// --------------------------------------------------------------------------
// 8. rank-one zeta data: normalization, functional equation, invariance
// --------------------------------------------------------------------------
Outcome crit8() {
    Outcome o;
    double worst = 0;
    struct Block {
        int q;
        std::uint64_t first, count;
    };
    for (const Block blk : {Block{3, 1, 20}, Block{5, 21, 5}}) {
        Field F(blk.q, 1);
        G2 G(F);
        for (std::uint64_t s = blk.first; s < blk.first + blk.count; ++s) {
            BesselLike B(G, s);
            for (int chi = 0; chi < blk.q - 1; ++chi) {
                o.worst(worst, std::abs(base_value(G, B, chi) - Scalar(1)));
                const Scalar fe = gamma_fe(G, B, chi);
                const Scalar cl = gamma_closed(G, B, chi);
                o.worst(worst, std::abs(fe - cl) / std::max(1.0, std::abs(cl)));
            }
        }
    }
    // invariance under the Fourier-Jacobi subgroup, 100 random elements per seed
    {
        Field F(3, 1);
        G2 G(F);
        const int q = 3;
        WeilRep Wm(F, true);
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> dv(0, q - 1);
        std::uniform_real_distribution<double> dr(-1.0, 1.0);
        const Mat7 cconj = G.mul(G.weyl_gen(rB, 1), G.weyl_gen(rA, 1));
        const Mat7 cconj_inv = G.inverse(cconj);
        for (std::uint64_t seed : {1u, 2u}) {
            BesselLike B(G, seed);
            for (int trial = 0; trial < 100; ++trial) {
                const int chi = trial % (q - 1);
                InducedRep I(F, chi);
                std::vector<Scalar> phi(q), fv(I.dim());
                for (auto& v : phi) v = Scalar(dr(rng), dr(rng));
                for (auto& v : fv) v = Scalar(dr(rng), dr(rng));
                GL2 m{};
                do {
                    m = GL2{dv(rng), dv(rng), dv(rng), dv(rng)};
                } while (gl2_det(F, m) != 1);
                JElement e{m, {dv(rng), dv(rng), dv(rng), dv(rng), dv(rng)}};
                const Mat7 jh = G.mul(G.mul(cconj, j_elt(G, e)), cconj_inv);
                const JacobiElt pe = prbar(F, e);
                auto Bfun = [&](const Mat7& g) { return B.evaluate(g); };
                auto Bt = [&](const Mat7& g) { return B.evaluate(G.mul(g, jh)); };
                const std::vector<Scalar> phi2 = apply_op(q, Wm.jacobi(pe), phi);
                const std::vector<Scalar> f2 = apply_op(I.dim(), I.action(pe.g), fv);
                o.worst(worst, std::abs(ginzburg_Z(G, Wm, I, Bt, phi2, f2) -
                                        ginzburg_Z(G, Wm, I, Bfun, phi, fv)));
            }
        }
    }
    o.require(worst < 1e-7, "worst deviation " + std::to_string(worst));
    return o;
}

// --------------------------------------------------------------------------
// 9. rank-two machinery at q = 3: section collapse, cell pairing, census
// --------------------------------------------------------------------------
Outcome crit9() {
    Outcome o;
    Field F(3, 1);
    G2 G(F);
    QuadField K(F);
    const int q = 3;
    const Mat7 w2 = so7_w2(F);

    // one irrep of each type
    std::vector<Gl2Irrep> taus;
    {
        bool seen[3] = {false, false, false};
        for (const auto& t : all_generic_gl2(F)) {
            const int k = static_cast<int>(t.type);
            if (!seen[k]) {
                seen[k] = true;
                taus.push_back(t);
            }
        }
    }

    double worst = 0;
    for (const auto& tau : taus) {
        Gl2Model model(F, K, tau, -1);
        Section sec(G, model, model.bessel_vector());
        // exhaustive: the intertwined section vanishes off the origin of the
        // big double coset and collapses to the starred value at the origin
        for (int r1 = 0; r1 < q; ++r1)
            for (int r2 = 0; r2 < q; ++r2)
                for (int s1 = 0; s1 < q; ++s1)
                    for (int s2 = 0; s2 < q; ++s2)
                        for (int z3 = 0; z3 < q; ++z3)
                            for (int z4 = 0; z4 < q; ++z4)
                                for (int z5 = 0; z5 < q; ++z5) {
                                    const Mat7 gp = G.mul(
                                        G.mul(G.mul(G.mul(G.mul(G.x_alpha(r1),
                                                                G.root_elt(rAB, r2)),
                                                          w2),
                                                    G.x_alpha(s1)),
                                              G.root_elt(rAB, s2)),
                                        G.v_elt(0, 0, z3, z4, z5));
                                    const auto corners = sec.corner_multiset(gp);
                                    o.require(corners.size() <= 1,
                                              "corner multiplicity");
                                    const bool zero_case = !(r1 || r2 || s1 || s2);
                                    for (const GL2& m : all_gl2(F)) {
                                        const GL2 ms = gl2_star(F, m);
                                        Scalar val(0);
                                        for (const GL2& ai : corners)
                                            val += model.evaluate(
                                                sec.vec(),
                                                gl2_mul(F, gl2_mul(F, sec.d1(), ms),
                                                        ai));
                                        o.worst(worst,
                                                zero_case
                                                    ? std::abs(val - sec.wstar(m))
                                                    : std::abs(val));
                                    }
                                }
        // pairings against mock data: Levi collapse and the q^3 cell identity
        for (std::uint64_t seed : {5u, 17u}) {
            BesselLike B(G, seed);
            const Scalar lhs = psi_pair(
                G, [&](const Mat7& g) { return B.evaluate(g); },
                [&](const Mat7& g) { return sec.eval1(g); });
            const Scalar levi = psi_levi_closed(G, B, sec);
            o.worst(worst, std::abs(lhs - levi) / std::max(1.0, std::abs(levi)));
            const Scalar cell = psi_pair_w2cells(G, B, sec);
            const Scalar closed = psi_cell_closed(G, B, sec);
            o.worst(worst,
                    std::abs(cell - closed) / std::max(1.0, std::abs(closed)));
        }
        // data supported off the big double coset pairs to zero there
        BesselLike Bsmall(G, 23u, 0b0011u);
        o.worst(worst, std::abs(psi_pair_w2cells(G, Bsmall, sec)));
    }
    o.require(worst < 1e-7, "worst deviation " + std::to_string(worst));

    // four-cell census, exact at q = 3
    const CellCensus c = pw_census(G);
    o.require(c.total == 4245696, "census total");
    const std::array<std::uint64_t, 4> expect_sizes{11664, 139968, 1259712, 2834352};
    for (int i = 0; i < 4; ++i)
        o.require(c.sizes[i] == expect_sizes[i],
                  "census slot " + std::to_string(i));
    return o;
}

// --------------------------------------------------------------------------
// 10. density ranks and the converse pipeline over 50 seed pairs
// --------------------------------------------------------------------------
Outcome crit10() {
    Outcome o;
    for (int q : {3, 5, 7, 9, 11, 13}) {
        const auto d = density_check(1, q);
        o.require(d.full_rank, "rank-one density at q=" + std::to_string(q));
    }
    {
        const auto d = density_check(2, 3);
        o.require(d.rows == 16 && d.rank == 16,
                  "rank-two density at q=3");
    }
    Field F(3, 1);
    G2 G(F);
    QuadField K(F);
    int run = 0;
    auto check_pair = [&](const BesselLike& B1, const BesselLike& B2,
                          bool expect_equal) {
        ++run;
        const auto v = converse_pipeline(G, K, B1, B2);
        o.require(v.equal == expect_equal && v.sound,
                  "pair " + std::to_string(run) + ": verdict " +
                      (v.equal ? "equal" : "distinct (" + v.witness + ")") +
                      ", expected " + (expect_equal ? "equal" : "distinct"));
    };
    // 20 identical pairs, 25 independent pairs
    for (std::uint64_t s = 0; s < 20; ++s) {
        BesselLike A(G, 100 + s), B(G, 100 + s);
        check_pair(A, B, true);
    }
    for (std::uint64_t s = 0; s < 25; ++s) {
        BesselLike A(G, 300 + s), B(G, 600 + s);
        check_pair(A, B, false);
    }
    // 5 adversarial near-equal pairs: identical on all but one support cell
    for (int k = 0; k < 5; ++k) {
        const std::array<std::uint64_t, 4> base{900u + k, 910u + k, 920u + k,
                                                930u + k};
        std::array<std::uint64_t, 4> tweak = base;
        tweak[1 + (k % 3)] += 5000;
        BesselLike A(G, base), B(G, tweak);
        check_pair(A, B, false);
    }
    o.require(run == 50, "pair count");
    return o;
}

struct Criterion {
    const char* label;
    const char* budget;
    std::function<Outcome()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"generator validity (q=3,5,7,9; exact)", "<5s", crit1},
        {"group census at q=3 (exact)", "<2min", crit2},
        {"Weil homomorphism (q=3 exhaustive, q=5 sampled; tol 1e-9)", "<1min",
         crit3},
        {"Jacobi class equation (q=3,5,7,9) and q=3 orbits (exact)", "<2min",
         crit4},
        {"character column direct vs printed (q=3,5; tol 1e-8)", "<1min", crit5},
        {"character-sum closed forms (q<=13 and 27; tol 1e-8)", "<1min", crit6},
        {"multiplicity-one pairings and dichotomies (q=3,5,7; tol 1e-6)",
         "<1min", crit7},
        {"rank-one zeta: normalization, gamma, invariance (tol 1e-7)", "<5min",
         crit8},
        {"rank-two machinery at q=3: collapse, cells, census (tol 1e-7)",
         "<20min", crit9},
        {"density ranks and converse pipeline, 50 pairs (exact verdicts)",
         "<30min", crit10},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("%s %2zu: %s [%s; %.1fs]%s%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label, criteria[i].budget, secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && o.ok;
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES");
    return all_ok ? 0 : 1;
}
