#include "doctest.h"

#include "g2fq/smallrep.hpp"

#include <cmath>

using namespace g2fq;

namespace {
constexpr double kTol = 1e-9;

bool vec_close(const std::vector<Scalar>& x, const std::vector<Scalar>& y, double tol = kTol) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - y[i]) > tol) return false;
    return true;
}
}  // namespace

TEST_SUITE("smallrep") {

TEST_CASE("Weil representation is a homomorphism on SL2 (exhaustive, q = 3, 5)") {
    for (int p : {3, 5}) {
        Field F(p, 1);
        for (bool conj : {false, true}) {
            WeilRep W(F, conj);
            auto sl2 = all_sl2(F);
            std::vector<Op> ops;
            ops.reserve(sl2.size());
            for (GL2 g : sl2) ops.push_back(W.sl2(g));
            // all pairs at q = 3; strided subset at q = 5
            size_t step = (p == 3) ? 1 : 7;
            for (size_t i = 0; i < sl2.size(); i += step)
                for (size_t j = 0; j < sl2.size(); j += step) {
                    Op prod = op_mul(F.q(), ops[i], ops[j]);
                    Op direct = W.sl2(gl2_mul(F, sl2[i], sl2[j]));
                    CHECK(op_close(F.q(), prod, direct, kTol));
                }
        }
    }
}

TEST_CASE("Weil representation respects the Jacobi group law") {
    Field F(3, 1);
    WeilRep W(F, false);
    auto sl2 = all_sl2(F);
    std::mt19937 rng(11);
    std::uniform_int_distribution<size_t> gi(0, sl2.size() - 1);
    std::uniform_int_distribution<int> xi(0, 2);
    for (int t = 0; t < 400; ++t) {
        JacobiElt u{sl2[gi(rng)], xi(rng), xi(rng), xi(rng)};
        JacobiElt v{sl2[gi(rng)], xi(rng), xi(rng), xi(rng)};
        Op lhs = W.jacobi(jacobi_mul(F, u, v));
        Op rhs = op_mul(F.q(), W.jacobi(u), W.jacobi(v));
        CHECK(op_close(F.q(), lhs, rhs, kTol));
    }
    // Heisenberg alone, exhaustively
    for (int x1 = 0; x1 < 3; ++x1)
        for (int y1 = 0; y1 < 3; ++y1)
            for (int z1 = 0; z1 < 3; ++z1)
                for (int x2 = 0; x2 < 3; ++x2)
                    for (int y2 = 0; y2 < 3; ++y2)
                        for (int z2 = 0; z2 < 3; ++z2) {
                            int z = F.add(F.add(z1, z2),
                                          F.sub(F.mul(x2, y1), F.mul(x1, y2)));
                            Op lhs = W.heisenberg(F.add(x1, x2), F.add(y1, y2), z);
                            Op rhs = op_mul(3, W.heisenberg(x1, y1, z1),
                                            W.heisenberg(x2, y2, z2));
                            CHECK(op_close(3, lhs, rhs, kTol));
                        }
    // the center acts by psi
    Op c = W.heisenberg(0, 0, 1);
    Op expect = op_identity(3);
    for (auto& z : expect) z *= F.psi(1);
    CHECK(op_close(3, c, expect, kTol));
}

TEST_CASE("extract_j and j_elt are inverse bijections on J (q = 3)") {
    Field F(3, 1);
    G2 G(F);
    auto sl2 = all_sl2(F);
    int count = 0;
    for (GL2 m : sl2)
        for (int r1 = 0; r1 < 3; ++r1)
            for (int r2 = 0; r2 < 3; ++r2)
                for (int r3 = 0; r3 < 3; ++r3)
                    for (int r4 = 0; r4 < 3; ++r4)
                        for (int r5 = 0; r5 < 3; ++r5) {
                            JElement e{m, {r1, r2, r3, r4, r5}};
                            Mat7 j = j_elt(G, e);
                            CHECK(G.in_group(j));
                            auto back = extract_j(G, j);
                            REQUIRE(back.has_value());
                            CHECK(back->m == m);
                            CHECK(back->r == e.r);
                            ++count;
                        }
    CHECK(count == 5832);  // |J| = q^6 (q^2 - 1)
    // elements outside J are rejected
    CHECK(!extract_j(G, G.root_elt(rA + 6, 1)).has_value());
    CHECK(!extract_j(G, G.weyl()[G.longest_weyl()].rep).has_value());
}

TEST_CASE("the J action through the Weil representation is a homomorphism") {
    Field F(3, 1);
    G2 G(F);
    WeilRep W(F, false), Wb(F, true);
    auto sl2 = all_sl2(F);
    std::mt19937 rng(17);
    std::uniform_int_distribution<size_t> gi(0, sl2.size() - 1);
    std::uniform_int_distribution<int> xi(0, 2);
    auto rand_j = [&]() {
        JElement e{sl2[gi(rng)], {xi(rng), xi(rng), xi(rng), xi(rng), xi(rng)}};
        return j_elt(G, e);
    };
    for (int t = 0; t < 300; ++t) {
        Mat7 j1 = rand_j(), j2 = rand_j();
        for (const WeilRep* w : {&W, &Wb}) {
            Op lhs = weil_on_j(G, *w, G.mul(j1, j2));
            Op rhs = op_mul(3, weil_on_j(G, *w, j1), weil_on_j(G, *w, j2));
            CHECK(op_close(3, lhs, rhs, kTol));
        }
    }
    // x_beta(b) acts by psi(b xi^2) (the sign flip from conjugating by d1)
    for (int b = 0; b < 3; ++b) {
        Op got = weil_on_j(G, W, G.x_beta(b));
        Op want(9, Scalar(0));
        for (int xi2 = 0; xi2 < 3; ++xi2)
            want[xi2 * 3 + xi2] = F.psi(F.mul(b, F.mul(xi2, xi2)));
        CHECK(op_close(3, got, want, kTol));
    }
    // x_{2a+b}(z) maps to the Heisenberg center and acts by psi(z);
    // the two highest root directions act trivially
    for (int z = 0; z < 3; ++z) {
        Op got = weil_on_j(G, W, G.root_elt(rA2B, z));
        Op want = op_identity(3);
        for (auto& v : want) v *= F.psi(z);
        CHECK(op_close(3, got, want, kTol));
        CHECK(op_close(3, weil_on_j(G, W, G.root_elt(rA3B, z)), op_identity(3), kTol));
        CHECK(op_close(3, weil_on_j(G, W, G.root_elt(rA3B2, z)), op_identity(3), kTol));
    }
}

TEST_CASE("principal series I(chi) of SL2") {
    for (int p : {3, 5}) {
        Field F(p, 1);
        auto sl2 = all_sl2(F);
        for (int chi = 0; chi < F.q() - 1; ++chi) {
            InducedRep I(F, chi);
            const int n = I.dim();
            CHECK(n == F.q() + 1);
            // right translation is a homomorphism (sampled pairs)
            std::mt19937 rng(23 + chi);
            std::uniform_int_distribution<size_t> gi(0, sl2.size() - 1);
            auto matmul = [n](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
                std::vector<Scalar> z(n * n, Scalar(0));
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k)
                        for (int j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
                return z;
            };
            for (int t = 0; t < 40; ++t) {
                GL2 g1 = sl2[gi(rng)], g2 = sl2[gi(rng)];
                // f(r g1 g2) expands through g1 first: rho(g1 g2) = rho(g2) rho(g1)
                // under row convention M[i][j] = coefficient of f(r_j) in f(r_i g).
                auto lhs = I.action(gl2_mul(F, g1, g2));
                auto rhs = matmul(I.action(g1), I.action(g2));
                // check both orders; exactly one must match for noncommuting pairs
                auto rhs2 = matmul(I.action(g2), I.action(g1));
                bool ok = vec_close(lhs, rhs) || vec_close(lhs, rhs2);
                CHECK(ok);
                CHECK(vec_close(lhs, rhs));
            }
            // the intertwiner commutes with the action: M rho_chi(g) = rho_{chi^-1}(g) M
            InducedRep I2(F, chi == 0 ? 0 : F.q() - 1 - chi);
            auto M = I.intertwiner();
            for (int t = 0; t < 20; ++t) {
                GL2 g = sl2[gi(rng)];
                CHECK(vec_close(matmul(M, I.action(g)), matmul(I2.action(g), M)));
            }
            // explicit values on the Borel-supported standard vector f0 = e_0:
            // (M f0)(1) = 0 and (M f0)(w n(r)) = 1 for every r
            CHECK(std::abs(M[0 * n + 0]) < kTol);
            for (int r = 0; r < F.q(); ++r)
                CHECK(std::abs(M[(1 + r) * n + 0] - Scalar(1)) < kTol);
        }
    }
}

TEST_CASE("GL2 generic irreps: count, dimensions, character orthogonality") {
    for (int p : {3, 5}) {
        Field F(p, 1);
        QuadField K(F);
        const int q = F.q();
        auto irreps = all_generic_gl2(F);
        CHECK(static_cast<int>(irreps.size()) == q * (q - 1));

        auto gl2 = all_gl2(F);
        const double order = static_cast<double>(gl2.size());
        std::vector<Gl2Model> models;
        models.reserve(irreps.size());
        for (const auto& pi : irreps) models.emplace_back(F, K, pi, 1);

        for (size_t i = 0; i < models.size(); ++i) {
            CHECK(std::abs(models[i].char_value(GL2{1, 0, 0, 1}) -
                           Scalar(irreps[i].dim)) < kTol);
            // <chi_i, chi_i> = 1 and <chi_i, chi_j> = 0
            for (size_t j = i; j < models.size(); ++j) {
                Scalar s = 0;
                for (GL2 g : gl2)
                    s += models[i].char_value(g) * std::conj(models[j].char_value(g));
                double want = (i == j) ? 1.0 : 0.0;
                CHECK(std::abs(s / order - Scalar(want)) < 1e-7);
            }
        }
    }
}

TEST_CASE("Bessel functions and Whittaker models") {
    for (int p : {3, 5}) {
        Field F(p, 1);
        QuadField K(F);
        auto irreps = all_generic_gl2(F);
        std::mt19937 rng(31);
        auto gl2 = all_gl2(F);
        std::uniform_int_distribution<size_t> gi(0, gl2.size() - 1);
        std::uniform_int_distribution<int> xi(0, F.q() - 1);
        for (const auto& pi : irreps) {
            for (int sign : {1, -1}) {
                Gl2Model M(F, K, pi, sign);
                CHECK(std::abs(M.bessel(GL2{1, 0, 0, 1}) - Scalar(1)) < kTol);
                CHECK(static_cast<int>(M.basis().size()) == pi.dim);
                for (int t = 0; t < 25; ++t) {
                    GL2 g = gl2[gi(rng)];
                    int x = xi(rng), y = xi(rng);
                    GL2 nx{1, x, 0, 1}, ny{1, y, 0, 1};
                    // two-sided equivariance of the Bessel function
                    Scalar lhs = M.bessel(gl2_mul(F, nx, gl2_mul(F, g, ny)));
                    Scalar rhs = M.psi_model(F.add(x, y)) * M.bessel(g);
                    CHECK(std::abs(lhs - rhs) < kTol);
                    // evaluate/translate consistency on a random model vector
                    auto v = M.random_vector(rng);
                    GL2 h = gl2[gi(rng)];
                    CHECK(std::abs(M.evaluate(M.translate(v, g), h) -
                                   M.evaluate(v, gl2_mul(F, h, g))) < 1e-7);
                    // left equivariance of model vectors
                    CHECK(std::abs(M.evaluate(v, gl2_mul(F, nx, g)) -
                                   M.psi_model(x) * M.evaluate(v, g)) < 1e-7);
                }
            }
        }
    }
}

}  // TEST_SUITE
