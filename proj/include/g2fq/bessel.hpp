// Bessel-function framework on G2(F_q): the generic character psi_U of the
// maximal unipotent U, the four Weyl cells that can support a Bessel
// function, an admissibility test, and a generator of random Bessel-like
// functions -- U-bi-equivariant functions normalized at 1 that vanish at
// inadmissible points.  These satisfy exactly the axioms that the zeta-sum
// identities downstream rely on.

#pragma once

#include "g2fq/g2core.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace g2fq {

// psi_U(x_alpha(x) x_beta(y) u') = psi(x + y).  Throws if u is not in U.
Scalar psi_u(const G2& G, const Mat7& u);

// The four support slots, in order: 1, w_l s_alpha, w_l s_beta, w_l, with
// fixed representatives 1, w1 = w_b w_a w_b w_a^{-1} w_b^{-1},
// w2 = h(1,-1) w_a w_b w_a w_b^{-1} w_a^{-1}, and dot-w_l = w_b w2.
inline constexpr int kSupportSlots = 4;
Mat7 w1_rep(const G2& G);
Mat7 w2_rep(const G2& G);
Mat7 wl_rep(const G2& G);
// Weyl-group indices (into G.weyl()) of the four slots.
std::array<int, kSupportSlots> support_set(const G2& G);

// True iff every x_gamma(r) in U whose g-conjugate lies in U has matching
// psi_U values on both sides; a necessary condition for a Bessel-like
// function to be nonzero at g, and exact on torus-times-Weyl points.
bool admissible(const G2& G, const Mat7& g);

class BesselLike {
public:
    // Independent unit-disc values at every admissible (h(a,b), slot) cell,
    // drawn deterministically from cell_seeds[slot]; bit s of support_mask
    // keeps slot s (bit 0 must be set; the identity cell value is 1).
    BesselLike(const G2& G, std::array<std::uint64_t, kSupportSlots> cell_seeds,
               std::uint32_t support_mask = 0xF);
    BesselLike(const G2& G, std::uint64_t seed, std::uint32_t support_mask = 0xF)
        : BesselLike(G, std::array<std::uint64_t, 4>{seed, seed + 1, seed + 2, seed + 3},
                     support_mask) {}

    const G2& group() const { return *G_; }
    std::uint32_t mask() const { return mask_; }

    // B(u1 h(a,b) w u2) = psi_U(u1 u2) table(a, b, w); zero off the support.
    // Throws if g is not in G2.
    Scalar evaluate(const Mat7& g) const;
    // Raw cell value at h(a,b) * slot representative.
    Scalar cell_value(int slot, int a, int b) const;
    // Number of admissible torus points over a slot.
    int admissible_count(int slot) const;

private:
    const G2* G_;
    std::uint32_t mask_;
    std::array<int, kSupportSlots> weyl_of_slot_{};
    std::array<std::pair<int, int>, kSupportSlots> torus_shift_{};  // rep_w = h(a0,b0) * slot rep
    std::array<std::vector<Scalar>, kSupportSlots> table_;          // (a * q + b) -> value
    std::array<int, kSupportSlots> adm_count_{};
    std::array<int, 12> slot_of_weyl_{};
};

}  // namespace g2fq
