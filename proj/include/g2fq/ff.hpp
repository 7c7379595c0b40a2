// Finite field F_q (q = p^f, p an odd prime, q <= 2^16) with Zech-style
// discrete-log tables, additive/multiplicative characters, and the quadratic
// extension k2 = k[sqrt(kappa)].
//
// Elements are immutable integer codes in [0, q): the code of the polynomial
// c_0 + c_1 x + ... + c_{f-1} x^{f-1} over F_p is sum c_i p^i.  The generator
// kappa is the smallest primitive element under this code order, and the
// modulus polynomial is the lexicographically least irreducible monic
// polynomial of degree f, so everything is deterministic across runs.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace g2fq {

using Scalar = std::complex<double>;

class Field {
public:
    // Throws std::invalid_argument for even/non-prime p or p^f > 2^16.
    Field(int p, int f);

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }
    int kappa() const { return kappa_; }
    // Coefficients c_0..c_{f-1} of the monic modulus x^f + sum c_i x^i
    // (empty when f == 1).
    const std::vector<int>& modulus() const { return modulus_; }

    // --- field arithmetic on codes -------------------------------------
    int add(int a, int b) const {
        if (f_ == 1) { int s = a + b; return s >= p_ ? s - p_ : s; }
        return add_tab_.empty() ? add_slow(a, b) : add_tab_[a * q_ + b];
    }
    int neg(int a) const { return neg_tab_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        int m = log_tab_[a] + log_tab_[b];
        if (m >= q_ - 1) m -= q_ - 1;
        return exp_tab_[m];
    }
    int inv(int a) const;  // throws on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;
    // Embed an integer: n mod p as a field element.
    int from_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        return static_cast<int>(r);
    }
    int one() const { return 1; }
    // Discrete log base kappa; requires a != 0.
    int dlog(int a) const;
    int mult_order(int a) const;  // order in the multiplicative group

    // --- characters and quadratic residues ------------------------------
    // Legendre symbol: +1 on nonzero squares, -1 on non-squares, 0 at 0.
    int legendre(int a) const {
        if (a == 0) return 0;
        return (log_tab_[a] & 1) ? -1 : 1;
    }
    bool is_square(int a) const { return legendre(a) >= 0; }
    int eps0() const { return legendre(neg(1)); }  // eps(-1)
    // Trace to F_p, as an integer in [0, p).
    int trace(int a) const { return trace_tab_[a]; }
    // psi(x) = exp(2*pi*i*Tr(x)/p), the fixed nontrivial additive character.
    Scalar psi(int x) const { return psi_tab_[trace_tab_[x]]; }
    // Multiplicative character chi_j(kappa^m) = exp(2*pi*i*j*m/(q-1)); x != 0.
    Scalar mult_char(int j, int x) const;
    // eps as a complex value (0 at 0).
    Scalar eps(int x) const { return Scalar(static_cast<double>(legendre(x)), 0.0); }

    // --- Gauss-sum scalars ----------------------------------------------
    // Brute-force sum over F_q of psi(a x^2); requires a != 0.
    Scalar gauss_quad(int a) const;
    // eps_psi, the 4th root of unity with gauss_quad(1) = eps_psi * sqrt(q),
    // measured once from the literal sum (never chosen by convention).
    Scalar eps_psi() const { return eps_psi_; }
    // sqrt(eps0 * q) := eps_psi * sqrt(q), the branch used in closed forms.
    Scalar sqrt_eps0_q() const { return eps_psi_ * std::sqrt(static_cast<double>(q_)); }

    // Cube-class helper: x in (k^x)^3 (only meaningful when 3 | q-1; if
    // 3 does not divide q-1 every nonzero x is a cube).
    bool is_cube(int x) const;

private:
    int add_slow(int a, int b) const;

    int p_ = 0, f_ = 0, q_ = 0, kappa_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_tab_;   // exp_tab_[m] = code of kappa^m, m in [0, q-1)
    std::vector<int> log_tab_;   // log_tab_[code], code != 0; log_tab_[0] = -1
    std::vector<int> neg_tab_;
    std::vector<int> trace_tab_;
    std::vector<int> add_tab_;   // q*q table when q <= 256, else empty
    std::vector<Scalar> psi_tab_;  // exp(2*pi*i*t/p) for t in [0, p)
    Scalar eps_psi_;
};

// An element a + b*sqrt(kappa) of k2 = F_{q^2}, stored as codes in the base field.
struct QE {
    int a = 0;
    int b = 0;
    bool operator==(const QE&) const = default;
};

// Arithmetic in the quadratic extension k2 = k[sqrt(kappa)], including the
// norm-one subgroup (cardinality q+1) and discrete logs for characters of
// k2^x (tables are built when q^2 <= 2^20).
class QuadField {
public:
    explicit QuadField(const Field& F);

    const Field& base() const { return *F_; }
    QE one() const { return QE{1, 0}; }
    QE mul(QE u, QE v) const;
    QE conj(QE u) const { return QE{u.a, F_->neg(u.b)}; }  // Frobenius u^q
    QE pow(QE u, long long e) const;
    QE inv(QE u) const;
    int norm(QE u) const;  // a^2 - kappa*b^2, an element of k
    bool is_zero(QE u) const { return u.a == 0 && u.b == 0; }

    // All q+1 elements of the norm-one subgroup k2^1, with a generator first.
    const std::vector<QE>& norm_one() const { return norm_one_; }
    QE norm_one_generator() const { return norm_one_[0]; }

    // Cube membership in k2^x: u^((q^2-1)/3) == 1 (true for all u when
    // 3 does not divide q^2 - 1, which never happens for q coprime to 3).
    bool is_cube(QE u) const;

    // Discrete log of u in k2^x with respect to a fixed generator.
    int dlog(QE u) const;
    QE generator() const { return gen_; }
    // Character theta_j of k2^x: theta_j(g^m) = exp(2*pi*i*j*m/(q^2-1)).
    Scalar theta(int j, QE u) const;

private:
    const Field* F_;
    QE gen_;
    std::vector<int> log2_;  // indexed by a*q + b; -1 at 0
    std::vector<QE> norm_one_;
};

}  // namespace g2fq
