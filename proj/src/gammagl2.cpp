#include "g2fq/gammagl2.hpp"

#include <cmath>
#include <stdexcept>

namespace g2fq {

GL2 gl2_star(const Field& F, GL2 m) {
    const int det = gl2_det(F, m);
    if (det == 0) throw std::invalid_argument("gl2_star: singular matrix");
    return GL2{F.div(m.a, det), F.div(F.neg(m.b), det), F.div(F.neg(m.c), det),
               F.div(m.d, det)};
}

Mat7 so7_w2(const Field& F) {
    Mat7 w{};
    const int n1 = F.neg(1);
    w.at(0, 5) = n1;
    w.at(1, 6) = n1;
    w.at(2, 4) = n1;
    w.at(3, 3) = n1;
    w.at(4, 2) = n1;
    w.at(5, 0) = n1;
    w.at(6, 1) = n1;
    return w;
}

std::vector<Mat7> utilde_all(const G2& G) {
    const Field& F = G.field();
    const int q = F.q();
    const int half = F.inv(F.from_int(2));
    std::vector<Mat7> out;
    out.reserve(static_cast<std::size_t>(q) * q * q * q * q * q * q);
    std::array<int, 6> av{};
    for (;;) {
        // a as a 2x3 block: aa[i][j] = av[3 i + j]
        int aa[2][3] = {{av[0], av[1], av[2]}, {av[3], av[4], av[5]}};
        // taJ[i][j] = (t(a) J)[i][j] = aa[1-j][i]
        int taJ[3][2];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) taJ[i][j] = aa[1 - j][i];
        // c = -R^{-1} t(a) J with R^{-1} = [[0,0,-1],[0,1/2,0],[-1,0,0]]
        int c[3][2];
        for (int j = 0; j < 2; ++j) {
            c[0][j] = taJ[2][j];
            c[1][j] = F.neg(F.mul(half, taJ[1][j]));
            c[2][j] = taJ[0][j];
        }
        // Rc with R = [[0,0,-1],[0,2,0],[-1,0,0]]
        int rc[3][2];
        for (int j = 0; j < 2; ++j) {
            rc[0][j] = F.neg(c[2][j]);
            rc[1][j] = F.mul(F.from_int(2), c[1][j]);
            rc[2][j] = F.neg(c[0][j]);
        }
        int m2[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(c[k][i], rc[k][j]));
                m2[i][j] = s;
            }
        // particular solution b0 = -(1/2) J m2; center direction N = diag(-1, 1)
        int b0[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) b0[i][j] = F.neg(F.mul(half, m2[1 - i][j]));
        for (int s = 0; s < q; ++s) {
            Mat7 u = G.identity();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j) u.at(i, 2 + j) = aa[i][j];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j) u.at(2 + i, 5 + j) = c[i][j];
            u.at(0, 5) = F.sub(b0[0][0], s);
            u.at(0, 6) = b0[0][1];
            u.at(1, 5) = b0[1][0];
            u.at(1, 6) = F.add(b0[1][1], s);
            out.push_back(u);
        }
        int i = 0;
        while (i < 6 && ++av[i] == q) av[i++] = 0;
        if (i == 6) break;
    }
    return out;
}

bool ptilde_member(const Mat7& g) {
    for (int r = 2; r < 7; ++r)
        for (int c = 0; c < 2; ++c)
            if (g.at(r, c) != 0) return false;
    return true;
}

GL2 ptilde_a(const Mat7& g) { return GL2{g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1)}; }

Section::Section(const G2& G, const Gl2Model& model, const std::vector<Scalar>& v,
                 bool d1_minus_first)
    : G_(&G), model_(&model), v_(v) {
    const Field& F = G.field();
    d1_ = d1_minus_first ? GL2{F.neg(1), 0, 0, 1} : GL2{1, 0, 0, F.neg(1)};
    const Mat7 w2 = so7_w2(F);
    for (const Mat7& u : utilde_all(G)) w2u_.push_back(G.mul(w2, u));
}

Scalar Section::eval(const Mat7& g, GL2 a) const {
    if (!ptilde_member(g)) return Scalar(0);
    return model_->evaluate(v_, gl2_mul(G_->field(), a, ptilde_a(g)));
}

std::vector<GL2> Section::corner_multiset(const Mat7& g) const {
    const Field& F = G_->field();
    std::vector<GL2> out;
    for (const Mat7& wu : w2u_) {
        // lower-left 5x2 block of wu * g, with early exit
        bool member = true;
        for (int r = 2; member && r < 7; ++r)
            for (int c = 0; c < 2; ++c) {
                int s = 0;
                for (int k = 0; k < 7; ++k) s = F.add(s, F.mul(wu.at(r, k), g.at(k, c)));
                if (s != 0) {
                    member = false;
                    break;
                }
            }
        if (!member) continue;
        // The section is carried along G2: a term contributes only when the
        // translated point lands back in H = Ptilde intersect G2, not merely
        // in Ptilde.
        const Mat7 x = G_->mul(wu, g);
        if (!G_->in_group(x)) continue;
        out.push_back(ptilde_a(x));
    }
    return out;
}

Scalar Section::mw2_eval1(const Mat7& g) const {
    const Field& F = G_->field();
    Scalar total(0);
    for (const GL2& a : corner_multiset(g))
        total += model_->evaluate(v_, gl2_mul(F, d1_, a));
    return total;
}

Scalar Section::wstar(GL2 m) const {
    const Field& F = G_->field();
    return model_->evaluate(v_, gl2_mul(F, d1_, gl2_star(F, m)));
}

Scalar psi_pair(const G2& G, const G2Fn& W, const G2Fn& f) {
    Scalar total(0);
    for (const Mat7& g : G.coset_reps(Cosets::UH)) total += W(g) * f(g);
    return total;
}

Scalar psi_pair_w2cells(const G2& G, const BesselLike& B, const Section& s) {
    const auto slots = support_set(G);
    Scalar total(0);
    for (const Mat7& g : G.coset_reps(Cosets::UH)) {
        auto br = G.bruhat(g);
        if (!br || (br->w != slots[2] && br->w != slots[3])) continue;
        const Scalar bv = B.evaluate(g);
        if (bv == Scalar(0)) continue;
        total += bv * s.mw2_eval1(g);
    }
    return total;
}

Scalar psi_cell_closed(const G2& G, const BesselLike& B, const Section& s) {
    const Field& F = G.field();
    const Mat7 w2 = so7_w2(F);
    Scalar total(0);
    for (const GL2& m : s.model().cosets())
        total += B.evaluate(G.mul(G.gl2_embed(m.a, m.b, m.c, m.d), w2)) * s.wstar(m);
    return std::pow(double(F.q()), 3) * total;
}

Scalar psi_levi_closed(const G2& G, const BesselLike& B, const Section& s) {
    Scalar total(0);
    for (const GL2& m : s.model().cosets())
        total += B.evaluate(G.gl2_embed(m.a, m.b, m.c, m.d)) *
                 s.model().evaluate(s.vec(), m);
    return total;
}

Scalar gamma_gl2(const G2& G, const BesselLike& B, const Section& s) {
    const Scalar den = psi_pair(
        G, [&](const Mat7& g) { return B.evaluate(g); },
        [&](const Mat7& g) { return s.eval1(g); });
    if (std::abs(den) < 1e-12) throw std::domain_error("gamma_gl2: degenerate input");
    return psi_pair_w2cells(G, B, s) / den;
}

CellCensus pw_census(const G2& G) {
    const auto& W = G.weyl();
    const Mat7 sb = G.weyl_gen(rB, 1);
    auto idx = [&](const Mat7& g) {
        auto br = G.bruhat(g);
        if (!br) throw std::logic_error("pw_census: element not in the group");
        return br->w;
    };
    // orbits of left/right multiplication by s_beta
    std::vector<int> group(W.size(), -1);
    int ngroups = 0;
    for (int w = 0; w < (int)W.size(); ++w) {
        if (group[w] >= 0) continue;
        std::vector<int> stack{w};
        group[w] = ngroups;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Mat7& y :
                 {G.mul(sb, W[x].rep), G.mul(W[x].rep, sb),
                  G.mul(G.mul(sb, W[x].rep), sb)}) {
                int z = idx(y);
                if (group[z] < 0) {
                    group[z] = ngroups;
                    stack.push_back(z);
                }
            }
        }
        ++ngroups;
    }
    if (ngroups != 4) throw std::logic_error("pw_census: expected four double cosets");
    // order: P, P wa P, P wa wb wa P, P w2 P
    const Mat7 wa = G.weyl_gen(rA, 1);
    std::array<int, 4> rep_group = {
        group[G.weyl_identity()], group[idx(wa)],
        group[idx(G.mul(G.mul(wa, sb), wa))], group[idx(w2_rep(G))]};
    CellCensus out;
    const int q = G.q();
    const std::uint64_t borel =
        static_cast<std::uint64_t>(q - 1) * (q - 1) * q * q * q * q * q * q;
    for (int slot = 0; slot < 4; ++slot) {
        for (int w = 0; w < (int)W.size(); ++w)
            if (group[w] == rep_group[slot]) {
                out.weyl_groups[slot].push_back(w);
                std::uint64_t cell = borel;
                for (int l = 0; l < W[w].length; ++l) cell *= q;
                out.sizes[slot] += cell;
            }
        out.total += out.sizes[slot];
    }
    return out;
}

}  // namespace g2fq
