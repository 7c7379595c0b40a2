#include "g2fq/bessel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace g2fq {

namespace {
constexpr double kTol = 1e-9;
}

Scalar psi_u(const G2& G, const Mat7& u) {
    auto uc = G.unipotent_coords(u);
    if (!uc) throw std::invalid_argument("psi_u: element not in U");
    return G.field().psi(G.field().add((*uc)[0], (*uc)[1]));
}

Mat7 w1_rep(const G2& G) {
    const Mat7 wa = G.weyl_gen(rA, 1), wb = G.weyl_gen(rB, 1);
    return G.mul(G.mul(G.mul(G.mul(wb, wa), wb), G.inverse(wa)), G.inverse(wb));
}

Mat7 w2_rep(const G2& G) {
    const Mat7 wa = G.weyl_gen(rA, 1), wb = G.weyl_gen(rB, 1);
    Mat7 m = G.h_elt(1, G.field().neg(1));
    m = G.mul(m, wa);
    m = G.mul(m, wb);
    m = G.mul(m, wa);
    m = G.mul(m, G.inverse(wb));
    m = G.mul(m, G.inverse(wa));
    return m;
}

Mat7 wl_rep(const G2& G) { return G.mul(G.weyl_gen(rB, 1), w2_rep(G)); }

std::array<int, kSupportSlots> support_set(const G2& G) {
    std::array<Mat7, kSupportSlots> reps = {G.identity(), w1_rep(G), w2_rep(G), wl_rep(G)};
    std::array<int, kSupportSlots> out{};
    for (int s = 0; s < kSupportSlots; ++s) {
        auto br = G.bruhat(reps[s]);
        if (!br) throw std::logic_error("support_set: representative not in the group");
        out[s] = br->w;
    }
    return out;
}

bool admissible(const G2& G, const Mat7& g) {
    const Field& F = G.field();
    const Mat7 ginv = G.inverse(g);
    for (int gamma = 0; gamma < 6; ++gamma) {
        for (int r = 1; r < F.q(); ++r) {
            const Mat7 c = G.mul(G.mul(g, G.root_elt(gamma, r)), ginv);
            auto uc = G.unipotent_coords(c);
            if (!uc) continue;
            const int lhs = F.add((*uc)[0], (*uc)[1]);
            const int rhs = (gamma == rA || gamma == rB) ? r : 0;
            if (std::abs(F.psi(F.sub(lhs, rhs)) - Scalar(1)) > kTol) return false;
        }
    }
    return true;
}

BesselLike::BesselLike(const G2& G, std::array<std::uint64_t, kSupportSlots> cell_seeds,
                       std::uint32_t support_mask)
    : G_(&G), mask_(support_mask) {
    if (!(mask_ & 1u)) throw std::invalid_argument("BesselLike: identity cell must be kept");
    const Field& F = G.field();
    const int q = F.q();
    const std::array<Mat7, kSupportSlots> reps = {G.identity(), w1_rep(G), w2_rep(G),
                                                  wl_rep(G)};
    slot_of_weyl_.fill(-1);
    for (int s = 0; s < kSupportSlots; ++s) {
        auto br = G.bruhat(reps[s]);
        if (!br) throw std::logic_error("BesselLike: bad representative");
        weyl_of_slot_[s] = br->w;
        slot_of_weyl_[br->w] = s;
        // rep_w = h(a0, b0) * (slot representative)
        const Mat7 shift = G.mul(G.weyl()[br->w].rep, G.inverse(reps[s]));
        const int a0 = shift.at(0, 0), b0 = shift.at(1, 1);
        if (!(shift == G.h_elt(a0, b0)))
            throw std::logic_error("BesselLike: representatives differ by more than a torus");
        torus_shift_[s] = {a0, b0};

        table_[s].assign(q * q, Scalar(0));
        std::mt19937_64 rng(cell_seeds[s]);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        int count = 0;
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) {
                if (!admissible(G, G.mul(G.h_elt(a, b), reps[s]))) continue;
                ++count;
                Scalar v;
                do {
                    v = Scalar(unif(rng), unif(rng));
                } while (std::norm(v) > 1.0 || std::norm(v) < 1e-2);
                if (s == 0) v = Scalar(1);  // normalization B(1) = 1
                if (mask_ & (1u << s)) table_[s][a * q + b] = v;
            }
        adm_count_[s] = count;
    }
    if (adm_count_[0] != 1 || std::abs(table_[0][1 * q + 1] - Scalar(1)) > kTol)
        throw std::logic_error("BesselLike: identity cell is not a single normalized point");
}

Scalar BesselLike::evaluate(const Mat7& g) const {
    const G2& G = *G_;
    auto br = G.bruhat(g);
    if (!br) throw std::invalid_argument("BesselLike::evaluate: element not in the group");
    const int slot = slot_of_weyl_[br->w];
    if (slot < 0) return Scalar(0);
    const Field& F = G.field();
    const int a = F.mul(br->a, torus_shift_[slot].first);
    const int b = F.mul(br->b, torus_shift_[slot].second);
    const Scalar v = table_[slot][a * F.q() + b];
    if (v == Scalar(0)) return Scalar(0);
    return psi_u(G, br->u) * psi_u(G, br->uprime) * v;
}

Scalar BesselLike::cell_value(int slot, int a, int b) const {
    return table_[slot][a * G_->q() + b];
}

int BesselLike::admissible_count(int slot) const { return adm_count_[slot]; }

}  // namespace g2fq
