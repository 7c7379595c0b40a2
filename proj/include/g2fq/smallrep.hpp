// Small representations used throughout:
//   * the Weil representation of SL2(F_q) x Heisenberg on S(F_q),
//     extended to the Fourier-Jacobi subgroup J = SL2 x V of G2,
//   * principal series I(chi) of SL2 with its standard intertwiner,
//   * the generic irreducible representations of GL2(F_q) (principal,
//     Steinberg twists, cuspidal) through characters, Bessel functions,
//     and Whittaker models.

#pragma once

#include "g2fq/ff.hpp"
#include "g2fq/g2core.hpp"

#include <array>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

namespace g2fq {

// ---------------------------------------------------------------------------
// 2x2 matrices over F_q
// ---------------------------------------------------------------------------

struct GL2 {
    int a = 1, b = 0, c = 0, d = 1;
    bool operator==(const GL2&) const = default;
};

int gl2_det(const Field& F, GL2 g);
GL2 gl2_mul(const Field& F, GL2 x, GL2 y);
GL2 gl2_inv(const Field& F, GL2 g);  // throws on singular
std::vector<GL2> all_sl2(const Field& F);
std::vector<GL2> all_gl2(const Field& F);

// ---------------------------------------------------------------------------
// Weil representation
// ---------------------------------------------------------------------------

// Dense operator on S(F_q): (M phi)(xi) = sum_eta M[xi * q + eta] phi(eta).
using Op = std::vector<Scalar>;

Op op_mul(int q, const Op& x, const Op& y);
Op op_identity(int q);
bool op_close(int q, const Op& x, const Op& y, double tol);

// Element of SL2 x H with H the Heisenberg group
// [x1,y1,z1][x2,y2,z2] = [x1+x2, y1+y2, z1+z2 - x1 y2 + x2 y1].
struct JacobiElt {
    GL2 g;  // det 1
    int x = 0, y = 0, z = 0;
};
JacobiElt jacobi_mul(const Field& F, const JacobiElt& u, const JacobiElt& v);

class WeilRep {
public:
    // conjugate = false: built on psi; true: built on psi^{-1}.
    WeilRep(const Field& F, bool conjugate);

    const Field& field() const { return *F_; }
    Scalar psi_eff(int x) const;  // psi or its inverse

    Op heisenberg(int x, int y, int z) const;
    Op torus(int a) const;                  // diag(a, 1/a): eps(a) phi(a xi)
    Op upper(int b) const;                  // n(b): psi(-b xi^2) phi(xi)
    Op big_cell(int b) const;               // (0 b; -1/b 0): normalized Fourier kernel
    Scalar gamma_factor(int b) const;       // sum_x psi(-b x^2)
    Op sl2(GL2 g) const;                    // via Bruhat factorization
    Op jacobi(const JacobiElt& j) const { return op_mul(F_->q(), sl2(j.g), heisenberg(j.x, j.y, j.z)); }

private:
    const Field* F_;
    bool conj_;
};

// ---------------------------------------------------------------------------
// The Fourier-Jacobi subgroup J = SL2^beta x V of G2
// ---------------------------------------------------------------------------

struct JElement {
    GL2 m;                    // det 1, embedded along beta
    std::array<int, 5> r{};   // (r1..r5) coordinates of the V part
};

// j = sl2_beta_embed(m) * v_elt(r1..r5); empty if the matrix is not of this shape.
std::optional<JElement> extract_j(const G2& G, const Mat7& j);
Mat7 j_elt(const G2& G, const JElement& e);

// Projection to SL2 x H: (m, r) -> (d1 m d1, [r1, r2, r3 - r1 r2]),
// d1 = diag(-1, 1).
JacobiElt prbar(const Field& F, const JElement& e);

// Action of j in J on S(F_q) through the Weil representation.
Op weil_on_j(const G2& G, const WeilRep& W, const Mat7& j);

// ---------------------------------------------------------------------------
// Principal series I(chi) of SL2
// ---------------------------------------------------------------------------

// Unnormalized induction from the Borel: f(t(a) n(x) g) = chi(a) f(g),
// acting by right translation.  Basis of B\SL2: index 0 <-> identity coset,
// index 1 + x <-> coset of w n(x) with w = (0 1; -1 0).
class InducedRep {
public:
    InducedRep(const Field& F, int chi_index);

    int dim() const { return F_->q() + 1; }
    int chi_index() const { return chi_; }
    // Coset of g and the chi-value of its Borel factor.
    std::pair<int, Scalar> coset(GL2 g) const;
    GL2 coset_rep(int i) const;
    // Matrix of right translation by g: (rho(g) f)(r_i) = sum_j M[i][j] f(r_j).
    std::vector<Scalar> action(GL2 g) const;  // dim x dim, row-major
    // Standard intertwiner into I(chi^{-1}): (M f)(g) = sum_x f(w^{-1} n(x) g),
    // returned as a dim x dim matrix in the coset bases.
    std::vector<Scalar> intertwiner() const;

private:
    const Field* F_;
    int chi_;
};

// ---------------------------------------------------------------------------
// Generic irreducible representations of GL2(F_q)
// ---------------------------------------------------------------------------

enum class Gl2Type { Principal, Steinberg, Cuspidal };

struct Gl2Irrep {
    Gl2Type type = Gl2Type::Steinberg;
    int j1 = 0, j2 = 0;  // principal series chi_{j1} x chi_{j2}, j1 != j2
    int j = 0;           // Steinberg twist chi_j
    int jt = 0;          // cuspidal parameter: theta_{jt} on k2^x, regular
    int dim = 0;
};

std::vector<Gl2Irrep> all_generic_gl2(const Field& F);  // q(q-1) of them

// Character values and Bessel/Whittaker data for one generic irrep.
// psi_sign selects the additive character psi(sign * x) used for the
// Whittaker functional.
class Gl2Model {
public:
    Gl2Model(const Field& F, const QuadField& K, const Gl2Irrep& pi, int psi_sign = 1);

    const Gl2Irrep& irrep() const { return pi_; }
    const Field& field() const { return *F_; }
    Scalar psi_model(int x) const;
    Scalar char_value(GL2 g) const;
    // Bessel function: J(1) = 1, J(n(x) g n(y)) = psi_model(x + y) J(g).
    Scalar bessel(GL2 g) const;

    // Whittaker model: functions v on GL2 with v(n(x) g) = psi_model(x) v(g),
    // stored by values on the (q^2-1)(q-1) representatives of N\GL2.
    using Vec = std::vector<Scalar>;
    const std::vector<GL2>& cosets() const { return cosets_; }
    // index of the coset of g; *x_out receives x with g = n(x) * rep.
    int coset_of(GL2 g, int* x_out) const;
    Scalar evaluate(const Vec& v, GL2 g) const;
    Vec translate(const Vec& v, GL2 g0) const;  // tau(g0) v: g -> v(g g0)
    Vec bessel_vector() const;
    const std::vector<Vec>& basis() const { return basis_; }  // dim() many
    int dim() const { return pi_.dim; }
    Vec random_vector(std::mt19937& rng) const;

private:
    void build_cosets();
    void build_basis();

    const Field* F_;
    const QuadField* K_;
    Gl2Irrep pi_;
    int sign_;
    std::vector<int> sqrt_tab_;  // a square root of each square, -1 otherwise
    std::vector<GL2> cosets_;
    std::unordered_map<long long, int> coset_lut_;
    std::vector<Vec> basis_;
};

}  // namespace g2fq
