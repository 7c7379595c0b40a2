#include "g2fq/gammagl1.hpp"

#include <cmath>

namespace g2fq {

namespace {

std::vector<Scalar> apply_op(int q, const Op& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(q, Scalar(0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) out[i] += m[i * q + j] * v[j];
    return out;
}

std::vector<Scalar> apply_mat(int dim, const std::vector<Scalar>& m,
                              const std::vector<Scalar>& v) {
    std::vector<Scalar> out(dim, Scalar(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[i] += m[i * dim + j] * v[j];
    return out;
}

}  // namespace

Mat7 j_embed(const G2& G, const GL2& g) {
    const Mat7 c = G.mul(G.weyl_gen(rB, 1), G.weyl_gen(rA, 1));
    return G.mul(G.mul(c, G.sl2_beta_embed(g.a, g.b, g.c, g.d)), G.inverse(c));
}

std::vector<GL2> nsl2_reps(const Field& F) {
    std::vector<GL2> reps;
    const int q = F.q();
    for (int a = 1; a < q; ++a) reps.push_back({a, 0, 0, F.inv(a)});
    const GL2 w{0, 1, F.neg(1), 0};
    for (int a = 1; a < q; ++a)
        for (int r = 0; r < q; ++r)
            reps.push_back(gl2_mul(F, gl2_mul(F, GL2{a, 0, 0, F.inv(a)}, w),
                                   GL2{1, r, 0, 1}));
    return reps;
}

Scalar ginzburg_Z(const G2& G, const WeilRep& Wm, const InducedRep& I, const G2Fn& B,
                  const std::vector<Scalar>& phi, const std::vector<Scalar>& f) {
    const Field& F = G.field();
    const int q = F.q();
    const Mat7 cconj = G.mul(G.weyl_gen(rB, 1), G.weyl_gen(rA, 1));
    const Mat7 cconj_inv = G.inverse(cconj);
    // left factors j(x_{3a+b}(y) x_a(x)), indexed y * q + x
    std::vector<Mat7> left;
    left.reserve(q * q);
    for (int y = 0; y < q; ++y)
        for (int x = 0; x < q; ++x)
            left.push_back(G.mul(G.mul(cconj, G.root_elt(rA3B, y)), G.root_elt(rA, x)));

    Scalar total(0);
    for (const GL2& g : nsl2_reps(F)) {
        auto [idx, cval] = I.coset(g);
        const Scalar fg = cval * f[idx];
        if (fg == Scalar(0)) continue;
        const std::vector<Scalar> wphi = apply_op(q, Wm.sl2(g), phi);
        // The coupling embeds d1 g d1 (d1 = diag(-1, 1)) into G2, matching the
        // twist in the projection that carries the Weil action from SL2 x H
        // back to the Fourier-Jacobi group.
        const Mat7 right = G.mul(
            G.sl2_beta_embed(g.a, F.neg(g.b), F.neg(g.c), g.d), cconj_inv);
        for (int y = 0; y < q; ++y)
            for (int x = 0; x < q; ++x) {
                if (wphi[x] == Scalar(0)) continue;
                total += B(G.mul(left[y * q + x], right)) * wphi[x] * fg;
            }
    }
    return total;
}

std::vector<Scalar> delta_zero(const Field& F) {
    std::vector<Scalar> phi(F.q(), Scalar(0));
    phi[0] = Scalar(1);
    return phi;
}

std::vector<Scalar> f_zero(const InducedRep& I) {
    std::vector<Scalar> f(I.dim(), Scalar(0));
    f[0] = Scalar(1);
    return f;
}

Scalar base_value(const G2& G, const BesselLike& B, int chi_index) {
    const Field& F = G.field();
    WeilRep Wm(F, true);
    InducedRep I(F, chi_index);
    return ginzburg_Z(G, Wm, I, [&](const Mat7& g) { return B.evaluate(g); },
                      delta_zero(F), f_zero(I));
}

Scalar gamma_fe(const G2& G, const BesselLike& B, int chi_index) {
    const Field& F = G.field();
    const int chi_inv = (F.q() - 1 - chi_index) % (F.q() - 1);
    WeilRep Wm(F, true);
    InducedRep I(F, chi_index), Iinv(F, chi_inv);
    const std::vector<Scalar> mf0 = apply_mat(I.dim(), I.intertwiner(), f_zero(I));
    return ginzburg_Z(G, Wm, Iinv, [&](const Mat7& g) { return B.evaluate(g); },
                      delta_zero(F), mf0);
}

Scalar gamma_closed(const G2& G, const BesselLike& B, int chi_index) {
    const Field& F = G.field();
    const int q = F.q();
    const int chi_inv = (q - 1 - chi_index) % (q - 1);
    const Mat7 w1 = w1_rep(G);
    Scalar sum(0);
    // chi^{-1} is evaluated at -a: the d1 twist of the coupling turns the
    // big-cell cosets t(a) w n(r) into h(-a, 1) w1 x_{3a+2b}(-r).
    for (int a = 1; a < q; ++a)
        sum += B.evaluate(G.mul(G.h_elt(a, 1), w1)) * F.eps(a) *
               F.mult_char(chi_inv, F.neg(a));
    return std::pow(double(q), 3) / F.sqrt_eps0_q() * sum;
}

}  // namespace g2fq
