#include "g2fq/converse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace g2fq {

namespace {

// q = p^f with p the smallest prime factor
Field field_for(int q) {
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            int f = 0, m = q;
            while (m % p == 0) {
                m /= p;
                ++f;
            }
            if (m != 1) throw std::invalid_argument("field_for: not a prime power");
            return Field(p, f);
        }
    return Field(q, 1);
}

int matrix_rank(std::vector<std::vector<Scalar>> rows, int cols) {
    double scale = 0;
    for (const auto& r : rows)
        for (const Scalar& v : r) scale = std::max(scale, std::abs(v));
    const double tol = 1e-8 * std::max(1.0, scale);
    int rank = 0;
    for (int c = 0; c < cols && rank < (int)rows.size(); ++c) {
        int piv = -1;
        double best = tol;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (std::abs(rows[r][c]) > best) {
                best = std::abs(rows[r][c]);
                piv = r;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const Scalar p = rows[rank][c];
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank) continue;
            const Scalar f = rows[r][c] / p;
            if (f == Scalar(0)) continue;
            for (int k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// All (tau, Whittaker basis vector) rows evaluated through a transform of the
// coset representatives; transform(m) = m gives the plain density matrix,
// transform(m) = d1 m* the variant paired against in the GL2 step.
template <typename Transform>
std::vector<std::vector<Scalar>> whittaker_rows(const Field& F, const QuadField& K,
                                                const std::vector<Gl2Irrep>& taus,
                                                const std::vector<GL2>& reps,
                                                Transform&& transform) {
    std::vector<std::vector<Scalar>> rows;
    for (const Gl2Irrep& tau : taus) {
        Gl2Model model(F, K, tau, -1);
        for (const auto& v : model.basis()) {
            std::vector<Scalar> row;
            row.reserve(reps.size());
            for (const GL2& m : reps) row.push_back(model.evaluate(v, transform(m)));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

struct CellDiffs {
    std::array<double, kSupportSlots> slot{};  // per support slot
    double off_support = 0;
    double overall = 0;
};

CellDiffs scan_cells(const G2& G, const BesselLike& B1, const BesselLike& B2) {
    CellDiffs out;
    const auto slots = support_set(G);
    for (const Mat7& g : G.coset_reps(Cosets::UH)) {
        const auto br = G.bruhat(g);
        const double d = std::abs(B1.evaluate(g) - B2.evaluate(g));
        int slot = -1;
        for (int s = 0; s < kSupportSlots; ++s)
            if (br && br->w == slots[s]) slot = s;
        if (slot >= 0)
            out.slot[slot] = std::max(out.slot[slot], d);
        else
            out.off_support = std::max(out.off_support, d);
        out.overall = std::max(out.overall, d);
    }
    return out;
}

Gl1Report gl1_gamma_part(const G2& G, const BesselLike& B1, const BesselLike& B2,
                         double tol) {
    Gl1Report rep;
    const Field& F = G.field();
    const int q = F.q();
    std::vector<Scalar> g1, g2;
    double scale = 1.0;
    for (int chi = 0; chi < q - 1; ++chi) {
        g1.push_back(gamma_closed(G, B1, chi));
        g2.push_back(gamma_closed(G, B2, chi));
        scale = std::max({scale, std::abs(g1.back()), std::abs(g2.back())});
    }
    rep.gammas_equal = true;
    for (int chi = 0; chi < q - 1; ++chi) {
        const double d = std::abs(g1[chi] - g2[chi]);
        if (d > rep.max_gamma_diff) {
            rep.max_gamma_diff = d;
            if (d > tol * scale) rep.witness_chi = chi;
        }
        if (d > tol * scale) rep.gammas_equal = false;
    }
    // Fourier inversion: the gamma differences determine the w1-cell torus
    // differences; reconstruct them and compare with the direct values.
    const Scalar C = std::pow(double(q), 3) / F.sqrt_eps0_q();
    const Mat7 w1 = w1_rep(G);
    rep.inversion_ok = true;
    for (int a = 1; a < q; ++a) {
        Scalar v(0);
        const int ma = F.neg(a);
        for (int chi = 0; chi < q - 1; ++chi)
            v += (g1[chi] - g2[chi]) / C * F.mult_char(chi, ma);
        v = v / Scalar(q - 1) * F.eps(a);
        const Scalar direct = B1.evaluate(G.mul(G.h_elt(a, 1), w1)) -
                              B2.evaluate(G.mul(G.h_elt(a, 1), w1));
        if (std::abs(v - direct) > tol * std::max(1.0, std::abs(direct)))
            rep.inversion_ok = false;
    }
    return rep;
}

Gl2Report gl2_sums_part(const G2& G, const QuadField& K, const BesselLike& B1,
                        const BesselLike& B2, bool cuspidal_only, double tol) {
    Gl2Report rep;
    rep.cuspidal_only = cuspidal_only;
    const Field& F = G.field();
    const Mat7 w2 = so7_w2(F);
    const GL2 d1{F.neg(1), 0, 0, 1};

    std::vector<Gl2Irrep> taus;
    for (const Gl2Irrep& t : all_generic_gl2(F))
        if (!cuspidal_only || t.type == Gl2Type::Cuspidal) taus.push_back(t);

    // coset representatives of N \ GL2, shared across taus
    Gl2Model first(F, K, taus.front(), -1);
    const std::vector<GL2> reps = first.cosets();

    std::vector<Scalar> bv1, bv2;
    for (const GL2& m : reps) {
        const Mat7 g = G.mul(G.gl2_embed(m.a, m.b, m.c, m.d), w2);
        bv1.push_back(B1.evaluate(g));
        bv2.push_back(B2.evaluate(g));
    }

    const auto rows = whittaker_rows(F, K, taus, reps, [&](const GL2& m) {
        return gl2_mul(F, d1, gl2_star(F, m));
    });

    // cell sums per (tau, vector), tracking a distinguishing witness
    double scale = 1.0;
    std::vector<Scalar> diffs;
    {
        int row_idx = 0;
        for (std::size_t ti = 0; ti < taus.size(); ++ti) {
            Gl2Model model(F, K, taus[ti], -1);
            for (int vi = 0; vi < model.dim(); ++vi, ++row_idx) {
                Scalar s1(0), s2(0);
                for (std::size_t j = 0; j < reps.size(); ++j) {
                    s1 += bv1[j] * rows[row_idx][j];
                    s2 += bv2[j] * rows[row_idx][j];
                }
                scale = std::max({scale, std::abs(s1), std::abs(s2)});
                diffs.push_back(s1 - s2);
                if (std::abs(s1 - s2) > rep.max_sum_diff) {
                    rep.max_sum_diff = std::abs(s1 - s2);
                    rep.witness_tau = (int)ti;
                    rep.witness_vec = vi;
                }
            }
        }
    }
    rep.sums_vanish = rep.max_sum_diff <= tol * scale;
    if (rep.sums_vanish) {
        rep.witness_tau = -1;
        rep.witness_vec = -1;
    }

    rep.density_cols = (int)reps.size();
    rep.density_rank = matrix_rank(rows, rep.density_cols);
    rep.density_ok = rep.density_rank == rep.density_cols;

    for (const GL2& m : all_gl2(F)) {
        const Mat7 g = G.mul(G.gl2_embed(m.a, m.b, m.c, m.d), w2);
        rep.max_levi_diff =
            std::max(rep.max_levi_diff, std::abs(B1.evaluate(g) - B2.evaluate(g)));
    }
    return rep;
}

}  // namespace

DensityReport density_check(int t, int q) {
    DensityReport rep;
    rep.t = t;
    rep.q = q;
    Field F = field_for(q);
    if (t == 1) {
        std::vector<std::vector<Scalar>> rows;
        for (int chi = 0; chi < q - 1; ++chi) {
            std::vector<Scalar> row;
            for (int a = 1; a < q; ++a) row.push_back(F.mult_char(chi, a));
            rows.push_back(std::move(row));
        }
        rep.rows = q - 1;
        rep.cols = q - 1;
        rep.rank = matrix_rank(std::move(rows), rep.cols);
    } else if (t == 2) {
        QuadField K(F);
        const auto taus = all_generic_gl2(F);
        Gl2Model first(F, K, taus.front(), -1);
        const auto reps = first.cosets();
        auto rows = whittaker_rows(F, K, taus, reps, [](const GL2& m) { return m; });
        rep.rows = (int)rows.size();
        rep.cols = (int)reps.size();
        rep.rank = matrix_rank(std::move(rows), rep.cols);
    } else {
        throw std::invalid_argument("density_check: t must be 1 or 2");
    }
    rep.full_rank = rep.rank == rep.cols;
    return rep;
}

Gl1Report gl1_step(const G2& G, const BesselLike& B1, const BesselLike& B2,
                   double tol) {
    Gl1Report rep = gl1_gamma_part(G, B1, B2, tol);
    rep.max_cell_diff = scan_cells(G, B1, B2).slot[1];
    rep.contradiction = rep.gammas_equal && rep.max_cell_diff > tol;
    return rep;
}

Gl2Report gl2_step(const G2& G, const QuadField& K, const BesselLike& B1,
                   const BesselLike& B2, bool cuspidal_only, double tol) {
    Gl2Report rep = gl2_sums_part(G, K, B1, B2, cuspidal_only, tol);
    const CellDiffs cd = scan_cells(G, B1, B2);
    rep.max_cell_diff = std::max(cd.slot[2], cd.slot[3]);
    rep.contradiction = rep.sums_vanish && rep.density_ok &&
                        (rep.max_levi_diff > tol || rep.max_cell_diff > tol);
    return rep;
}

ConverseVerdict converse_pipeline(const G2& G, const QuadField& K,
                                  const BesselLike& B1, const BesselLike& B2,
                                  bool cuspidal_only, double tol) {
    ConverseVerdict v;
    v.gl1 = gl1_gamma_part(G, B1, B2, tol);
    v.gl2 = gl2_sums_part(G, K, B1, B2, cuspidal_only, tol);

    const CellDiffs cd = scan_cells(G, B1, B2);
    v.gl1.max_cell_diff = cd.slot[1];
    v.gl1.contradiction = v.gl1.gammas_equal && v.gl1.max_cell_diff > tol;
    v.gl2.max_cell_diff = std::max(cd.slot[2], cd.slot[3]);
    v.gl2.contradiction = v.gl2.sums_vanish && v.gl2.density_ok &&
                          (v.gl2.max_levi_diff > tol || v.gl2.max_cell_diff > tol);
    v.max_diff_everywhere = cd.overall;

    const bool stages_pass = v.gl1.gammas_equal && v.gl2.sums_vanish &&
                             (!cuspidal_only ? v.gl2.density_ok : true);
    if (!v.gl1.gammas_equal) {
        v.witness = "chi=" + std::to_string(v.gl1.witness_chi);
    } else if (!v.gl2.sums_vanish) {
        v.witness = "tau=" + std::to_string(v.gl2.witness_tau) +
                    ",v=" + std::to_string(v.gl2.witness_vec);
    }
    if (stages_pass && v.max_diff_everywhere > tol) {
        v.equal = false;
        v.sound = false;
        v.witness = "pipeline contradiction";
    } else {
        v.equal = stages_pass;
        v.sound = true;
    }
    return v;
}

}  // namespace g2fq
