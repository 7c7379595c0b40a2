// Rank-two twisted zeta sums: the SO7 parabolic P~ with Levi GL2 x SO3, its
// unipotent radical U~, the involution w2, sections of the induced
// representation built from GL2 Whittaker functions, the intertwiner M_{w2},
// and the pairing Psi(W, f) = sum_{U_H \ G2} W(g) f(g, I2) together with its
// collapsed closed forms on the big cell.

#pragma once

#include "g2fq/bessel.hpp"
#include "g2fq/gammagl1.hpp"
#include "g2fq/smallrep.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace g2fq {

// m^* = J t(m)^{-1} J with J = antidiag(1, 1); equals d1 m d1 / det(m).
GL2 gl2_star(const Field& F, GL2 m);

// w2 as a 7x7 block matrix (3+1+3 blocks); equals the Weyl-word product
// h(1,-1) w_a w_b w_a w_b^{-1} w_a^{-1}.
Mat7 so7_w2(const Field& F);

// All q^7 elements of U~, the unipotent radical of P~ in SO7: block
// unitriangular [[I2, a, b], [0, I3, c], [0, 0, I2]] with c determined by a
// and b determined by a up to the one-parameter center.
std::vector<Mat7> utilde_all(const G2& G);

// P~ membership (lower-left 5x2 block zero) and the GL2 corner a(g).
bool ptilde_member(const Mat7& g);
GL2 ptilde_a(const Mat7& g);

// Section of the induced space attached to a Whittaker vector v of a generic
// GL2 irrep tau (in its psi^{-1} model): f(g, a) = W_v(a * a(g)) [g in P~].
class Section {
public:
    // d1_minus_first selects d1 = diag(-1, 1) (default) vs diag(1, -1).
    Section(const G2& G, const Gl2Model& model, const std::vector<Scalar>& v,
            bool d1_minus_first = true);

    const Gl2Model& model() const { return *model_; }
    const std::vector<Scalar>& vec() const { return v_; }
    GL2 d1() const { return d1_; }

    Scalar eval(const Mat7& g, GL2 a) const;
    Scalar eval1(const Mat7& g) const { return eval(g, GL2{1, 0, 0, 1}); }
    // (M_{w2} f)(g, I2) = sum_{u in U~} f(w2 u g, d1).
    Scalar mw2_eval1(const Mat7& g) const;
    // The GL2 corners a(w2 u g) over the u in U~ with w2 u g in P~.
    std::vector<GL2> corner_multiset(const Mat7& g) const;
    // W_v^*(m) = W_v(d1 m^*).
    Scalar wstar(GL2 m) const;

private:
    const G2* G_;
    const Gl2Model* model_;
    std::vector<Scalar> v_;
    GL2 d1_;
    std::vector<Mat7> w2u_;  // w2 * u over U~
};

// Psi(W, f) = sum over U_H \ G2 coset representatives of W(g) f(g).
Scalar psi_pair(const G2& G, const G2Fn& W, const G2Fn& f);
// The same sum with f = M_{w2}(section), restricted to the cosets lying in
// B w2 B or B wl B (where the intertwined section lives).
Scalar psi_pair_w2cells(const G2& G, const BesselLike& B, const Section& s);
// Collapsed closed form of the restricted sum:
// q^3 sum_{m in N\GL2} B(embed(m) w2) W_v(d1 m^*).
Scalar psi_cell_closed(const G2& G, const BesselLike& B, const Section& s);
// Collapse of Psi(B, f) itself: sum_{m in N\GL2} B(embed(m)) W_v(m).
Scalar psi_levi_closed(const G2& G, const BesselLike& B, const Section& s);

// gamma(B x tau) as the ratio Psi(B, M_{w2} f) / Psi(B, f).  The numerator
// is computed through the restricted cell sum (the intertwined section
// vanishes on G2 outside P w2 P).  Throws std::domain_error when the
// denominator pairing vanishes.
Scalar gamma_gl2(const G2& G, const BesselLike& B, const Section& s);

// The partition of G2 into the four P-double cosets P, P wa P, P wa wb wa P,
// P w2 P, computed through the Weyl group: member Weyl-cell indices and the
// cell sizes |B| sum q^{l(w)}.
struct CellCensus {
    std::array<std::vector<int>, 4> weyl_groups;
    std::array<std::uint64_t, 4> sizes{};
    std::uint64_t total = 0;
};
CellCensus pw_census(const G2& G);

}  // namespace g2fq
