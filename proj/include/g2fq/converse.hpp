// The converse pipeline: recover equality of two Bessel-like functions from
// equality of their GL1- and GL2-twisted gamma data.  The three stages mirror
// the cell structure of the support: a Fourier inversion on the w1-cell torus,
// a Whittaker-density argument killing the w2- and long-cell values, and a
// final pointwise audit over coset representatives.

#pragma once

#include "g2fq/bessel.hpp"
#include "g2fq/gammagl1.hpp"
#include "g2fq/gammagl2.hpp"

#include <string>

namespace g2fq {

// Rank of the evaluation matrix of all generic Whittaker functions on
// N_t \ GL_t coset representatives; full column rank makes the pairing
// sum_g phi(g) W(g) = 0 (for all W) force phi = 0.
struct DensityReport {
    int t = 0;
    int q = 0;
    int rows = 0;
    int cols = 0;
    int rank = 0;
    bool full_rank = false;
};
DensityReport density_check(int t, int q);

// Stage 1: GL1 twists.  Equal gamma vectors are Fourier-inverted back to the
// w1-cell torus values, the reconstruction is cross-checked against the
// direct differences, and the whole B w1 B cell is compared pointwise.
struct Gl1Report {
    bool gammas_equal = false;
    int witness_chi = -1;  // a distinguishing character index, or -1
    double max_gamma_diff = 0;
    bool inversion_ok = false;
    double max_cell_diff = 0;
    bool contradiction = false;  // equal gammas but differing cell values
};
Gl1Report gl1_step(const G2& G, const BesselLike& B1, const BesselLike& B2,
                   double tol = 1e-7);

// Stage 2: GL2 twists.  Computes the cell sums sum_m D(m w2) W_v(d1 m*) for
// every generic tau and every Whittaker basis vector; if all vanish and the
// density matrix has full rank, concludes D(m w2) = 0 on the Levi and hence
// on B w2 B and B wl B, then verifies pointwise.  cuspidal_only restricts the
// twisting family to cuspidal tau; the (deficient) rank is then reported and
// no density conclusion is asserted.
struct Gl2Report {
    bool sums_vanish = false;
    int witness_tau = -1;  // index into all_generic_gl2 (or the cuspidal list)
    int witness_vec = -1;
    double max_sum_diff = 0;
    int density_rank = 0;
    int density_cols = 0;
    bool density_ok = false;
    double max_levi_diff = 0;  // |D(m w2)| over all Levi elements m
    double max_cell_diff = 0;  // over B w2 B and B wl B representatives
    bool contradiction = false;
    bool cuspidal_only = false;
};
Gl2Report gl2_step(const G2& G, const QuadField& K, const BesselLike& B1,
                   const BesselLike& B2, bool cuspidal_only = false,
                   double tol = 1e-7);

// Full pipeline.  verdict.equal is true iff every stage passes; otherwise
// witness names a distinguishing character or (tau, vector) pair.  When the
// verdict is "equal", max_diff_everywhere audits pointwise equality over all
// U_H-coset representatives and sound records that the audit confirms it.
struct ConverseVerdict {
    bool equal = false;
    std::string witness;
    Gl1Report gl1;
    Gl2Report gl2;
    double max_diff_everywhere = 0;
    bool sound = true;
};
ConverseVerdict converse_pipeline(const G2& G, const QuadField& K,
                                  const BesselLike& B1, const BesselLike& B2,
                                  bool cuspidal_only = false, double tol = 1e-7);

}  // namespace g2fq
