// The split group G2(F_q) realized concretely as 7x7 matrices preserving a
// symmetric bilinear form inside SO_7.  Provides the twelve root subgroups,
// the torus, Weyl representatives, Bruhat decomposition, and coset
// enumeration for the Borel B, its unipotent radical U, and the subgroup
// U_H = <U_beta, U_{2a+b}, U_{3a+b}, U_{3a+2b}>.
//
// Basis convention: the standard basis vectors carry the weights
// (e1, e2, e3, 0, -e3, -e2, -e1); in the reordered basis (5,1,2,4,6,7,3)
// every positive root element is strictly upper triangular, which is what
// the Bruhat routines exploit.

#pragma once

#include "g2fq/ff.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace g2fq {

// 7x7 matrix of field element codes, row-major, 0-based indexing.
struct Mat7 {
    std::array<int, 49> m{};
    int& at(int r, int c) { return m[r * 7 + c]; }
    int at(int r, int c) const { return m[r * 7 + c]; }
    bool operator==(const Mat7&) const = default;
};

struct Mat7Hash {
    size_t operator()(const Mat7& g) const {
        size_t h = 1469598103934665603ull;
        for (int v : g.m) { h ^= static_cast<size_t>(v) + 0x9e3779b9; h *= 1099511628211ull; }
        return h;
    }
};

// Root indices.  Positive roots 0..5, negative root -g at index 6 + g.
enum Root : int {
    rA = 0,     // alpha
    rB = 1,     // beta
    rAB = 2,    // alpha + beta
    rA2B = 3,   // 2 alpha + beta
    rA3B = 4,   // 3 alpha + beta
    rA3B2 = 5,  // 3 alpha + 2 beta
};
inline int neg_root(int g) { return g < 6 ? g + 6 : g - 6; }

// (m, n) coefficients of a root m*alpha + n*beta (negated for negative roots).
std::pair<int, int> root_coeffs(int g);

struct WeylElt {
    std::vector<int> word;       // reduced word in generators 0 = s_alpha, 1 = s_beta
    int length = 0;
    Mat7 rep;                    // representative, a product of w_alpha / w_beta
    Mat7 rep_inv;
    std::array<int, 7> pattern;  // permutation in the reordered basis: column j -> row
    std::array<std::array<int, 2>, 2> act;  // action on root coefficients (m, n)
    std::vector<int> sent_negative;         // positive roots g with w(g) < 0, ascending
};

struct Bruhat {
    int w = 0;    // index into weyl()
    int a = 1;    // torus part h(a, b)
    int b = 1;
    Mat7 u;       // element of U
    Mat7 uprime;  // element of U_w (product over sent_negative roots)
};

enum class Cosets { B, U, UH };

class G2 {
public:
    explicit G2(const Field& F);

    const Field& field() const { return *F_; }
    int q() const { return F_->q(); }

    // --- matrix helpers over F_q ----------------------------------------
    Mat7 identity() const;
    Mat7 mul(const Mat7& x, const Mat7& y) const;
    Mat7 transpose(const Mat7& x) const;
    Mat7 inverse(const Mat7& x) const;  // Gaussian elimination; throws if singular
    int det(const Mat7& x) const;
    const Mat7& form_q() const { return Q_; }
    // t(g) Q g == Q and det(g) == 1.
    bool preserves_form(const Mat7& g) const;

    // --- generators -------------------------------------------------------
    Mat7 root_elt(int g, int r) const;   // x_g(r), g in [0, 12)
    Mat7 x_alpha(int r) const { return root_elt(rA, r); }
    Mat7 x_beta(int r) const { return root_elt(rB, r); }
    Mat7 weyl_gen(int g, int t) const;   // w_g(t) = x_g(t) x_{-g}(-1/t) x_g(t)
    Mat7 h_single(int g, int t) const;   // h_g(t) = w_g(t) w_g(1)^{-1}
    Mat7 h_elt(int a, int b) const;      // h(a,b) = diag(a,b,1/(ab),1,ab,1/b,1/a)
    // Value of the root m*alpha + n*beta at h(a, b), i.e. a^n b^{m-n}.
    int root_value(int g, int a, int b) const;

    // The unipotent radical element (r1..r5) =
    // x_a(r1) x_{a+b}(r2) x_{2a+b}(r3) x_{3a+b}(r4) x_{3a+2b}(r5).
    Mat7 v_elt(int r1, int r2, int r3, int r4, int r5) const;

    // --- Weyl group -------------------------------------------------------
    const std::vector<WeylElt>& weyl() const { return weyl_; }
    int weyl_identity() const { return 0; }
    int longest_weyl() const;  // index of the length-6 element
    // w(g) for a root index g (result a root index).
    int weyl_on_root(int w, int g) const;
    // Sign c = +-1 with rep_w x_g(r) rep_w^{-1} = x_{w(g)}(c r), measured once.
    int conj_sign(int w, int g) const { return conj_sign_[w][g]; }

    // --- Bruhat decomposition ----------------------------------------------
    // g = u * h(a,b) * rep_w * u'.  Empty when g does not lie in the group.
    std::optional<Bruhat> bruhat(const Mat7& g) const;
    bool in_group(const Mat7& g) const;

    // Coordinates (c_a, c_b, c_ab, c_2ab, c_3ab, c_3a2b) of u in U, factored
    // as the ordered product of positive root elements; empty if u is not in U.
    std::optional<std::array<int, 6>> unipotent_coords(const Mat7& u) const;

    // Factor u in U as u_h * x_alpha(c1) * x_{a+b}(c2) with u_h in U_H.
    // Returns {c1, c2, u_h}; empty if u is not unitriangular of this shape.
    struct UFactor { int c1 = 0; int c2 = 0; Mat7 uh; };
    std::optional<UFactor> factor_mod_uh(const Mat7& u) const;
    // Membership/coordinates for U_H: u = x_b(b) x_{2a+b}(r3) x_{3a+b}(r4) x_{3a+2b}(r5).
    struct UHCoords { int b = 0; int r3 = 0; int r4 = 0; int r5 = 0; };
    std::optional<UHCoords> uh_coords(const Mat7& u) const;

    // --- embeddings ---------------------------------------------------------
    // GL2 -> Levi of the Heisenberg parabolic: blockdiag(m, 1/det, 1, det, m~)
    // with m~ = J tm^{-1} J, J = antidiag(1,1).  Entries (a,b;c,d) as codes.
    Mat7 gl2_embed(int a, int b, int c, int d) const;
    // SL2 -> <U_beta, U_{-beta}> with n(r) -> x_beta(r).
    Mat7 sl2_beta_embed(int a, int b, int c, int d) const;

    // --- cosets and census ---------------------------------------------------
    // Left-coset representatives (canonical forms):
    //   B:  rep_w * u'
    //   U:  h(a,b) * rep_w * u'
    //   UH: x_alpha(c1) x_{a+b}(c2) * h(a,b) * rep_w * u'
    std::vector<Mat7> coset_reps(Cosets which) const;
    // Canonical representative of the coset (subgroup * g).
    Mat7 canonical_rep(Cosets which, const Mat7& g) const;
    // Index of the coset of g in the coset_reps(which) ordering; builds a
    // lookup table on first use per coset type.
    int coset_index(Cosets which, const Mat7& g) const;

    // Number of distinct group elements, by direct enumeration with packed
    // keys.  Only available for q <= 5 (memory); intended for q = 3.
    std::uint64_t census() const;

    // Enumerate all u' in U_w for the given Weyl index, in a fixed order.
    std::vector<Mat7> cell_unipotents(int w) const;
    // All q^6 elements of U in a fixed order.
    std::vector<Mat7> full_unipotent() const;

private:
    void build_weyl();
    void measure_conj_signs();
    std::array<int, 7> pivot_pattern(const Mat7& g_new) const;
    Mat7 to_new_basis(const Mat7& g) const;
    Mat7 to_old_basis(const Mat7& g) const;

    const Field* F_;
    Mat7 Q_;
    std::vector<WeylElt> weyl_;
    std::array<std::array<int, 12>, 12> conj_sign_{};
    mutable std::array<std::unordered_map<Mat7, int, Mat7Hash>, 3> coset_lookup_;
};

}  // namespace g2fq
