// Rank-one twisted zeta sums and gamma factors: the doubling-style sum
//   Z(W, phi, f) = sum_{N\SL2} sum_{x,y} W(j(x_{3a+b}(y) x_a(x) d1 g d1))
//                  (omega_{psi^-1}(g) phi)(x) f(g),   d1 = diag(-1, 1),
// coupling a Bessel-like function on G2, the Weil representation, and a
// principal-series section of SL2; the normalized test vectors; the gamma
// factor both through the intertwining functional equation and through its
// closed Gauss-sum form.

#pragma once

#include "g2fq/bessel.hpp"
#include "g2fq/smallrep.hpp"

#include <functional>
#include <vector>

namespace g2fq {

using G2Fn = std::function<Scalar(const Mat7&)>;

// j: SL2 -> G2, conjugation of the beta-root embedding by w_b w_a, so that
// j(t(a)) = h(a, 1), j(n(r)) = x_{3a+2b}(r), j(w) = w1.
Mat7 j_embed(const G2& G, const GL2& g);

// Coset representatives of N\SL2: t(a), then t(a) w n(r).
std::vector<GL2> nsl2_reps(const Field& F);

// The zeta sum.  phi has size q (Schwartz function on k); f holds
// coefficients in the coset basis of I.
Scalar ginzburg_Z(const G2& G, const WeilRep& Wm, const InducedRep& I, const G2Fn& B,
                  const std::vector<Scalar>& phi, const std::vector<Scalar>& f);

// phi = delta_0 and f0 = the section supported on the big Borel cell's
// complement, f0(1) = 1; with these, Z(B, delta_0, f0) = 1 for every
// Bessel-like B.
std::vector<Scalar> delta_zero(const Field& F);
std::vector<Scalar> f_zero(const InducedRep& I);
Scalar base_value(const G2& G, const BesselLike& B, int chi_index);

// gamma(Pi x chi, psi) as the proportionality constant of the functional
// equation: Z(B, delta_0, M f0) with M the standard intertwiner, evaluated
// in I(chi^{-1}).
Scalar gamma_fe(const G2& G, const BesselLike& B, int chi_index);

// Closed form: (q^3 / sqrt_eps0_q) sum_a B(h(a,1) w1) eps(a) chi^{-1}(-a).
Scalar gamma_closed(const G2& G, const BesselLike& B, int chi_index);

}  // namespace g2fq
