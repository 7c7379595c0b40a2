#include "g2fq/smallrep.hpp"

#include <cmath>
#include <stdexcept>

namespace g2fq {

// ---------------------------------------------------------------------------
// GL2 helpers
// ---------------------------------------------------------------------------

int gl2_det(const Field& F, GL2 g) { return F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c)); }

GL2 gl2_mul(const Field& F, GL2 x, GL2 y) {
    return GL2{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
               F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
               F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
               F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

GL2 gl2_inv(const Field& F, GL2 g) {
    int det = gl2_det(F, g);
    if (det == 0) throw std::invalid_argument("gl2_inv: singular");
    int di = F.inv(det);
    return GL2{F.mul(di, g.d), F.neg(F.mul(di, g.b)), F.neg(F.mul(di, g.c)), F.mul(di, g.a)};
}

std::vector<GL2> all_sl2(const Field& F) {
    std::vector<GL2> out;
    for (int a = 0; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b)
            for (int c = 0; c < F.q(); ++c)
                for (int d = 0; d < F.q(); ++d)
                    if (gl2_det(F, GL2{a, b, c, d}) == 1) out.push_back(GL2{a, b, c, d});
    return out;
}

std::vector<GL2> all_gl2(const Field& F) {
    std::vector<GL2> out;
    for (int a = 0; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b)
            for (int c = 0; c < F.q(); ++c)
                for (int d = 0; d < F.q(); ++d)
                    if (gl2_det(F, GL2{a, b, c, d}) != 0) out.push_back(GL2{a, b, c, d});
    return out;
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

Op op_identity(int q) {
    Op z(q * q, Scalar(0));
    for (int i = 0; i < q; ++i) z[i * q + i] = 1;
    return z;
}

Op op_mul(int q, const Op& x, const Op& y) {
    Op z(q * q, Scalar(0));
    for (int i = 0; i < q; ++i)
        for (int k = 0; k < q; ++k) {
            Scalar v = x[i * q + k];
            if (v == Scalar(0)) continue;
            for (int j = 0; j < q; ++j) z[i * q + j] += v * y[k * q + j];
        }
    return z;
}

bool op_close(int q, const Op& x, const Op& y, double tol) {
    for (int i = 0; i < q * q; ++i)
        if (std::abs(x[i] - y[i]) > tol) return false;
    return true;
}

JacobiElt jacobi_mul(const Field& F, const JacobiElt& u, const JacobiElt& v) {
    JacobiElt w;
    w.g = gl2_mul(F, u.g, v.g);
    // conjugate the first Heisenberg part across the second SL2 part:
    // (x, y) -> (x, y) * g as a row vector, z unchanged
    int x1 = F.add(F.mul(u.x, v.g.a), F.mul(u.y, v.g.c));
    int y1 = F.add(F.mul(u.x, v.g.b), F.mul(u.y, v.g.d));
    w.x = F.add(x1, v.x);
    w.y = F.add(y1, v.y);
    w.z = F.add(F.add(u.z, v.z), F.sub(F.mul(v.x, y1), F.mul(x1, v.y)));
    return w;
}

// ---------------------------------------------------------------------------
// WeilRep
// ---------------------------------------------------------------------------

WeilRep::WeilRep(const Field& F, bool conjugate) : F_(&F), conj_(conjugate) {}

Scalar WeilRep::psi_eff(int x) const {
    Scalar v = F_->psi(x);
    return conj_ ? std::conj(v) : v;
}

Op WeilRep::heisenberg(int x, int y, int z) const {
    const Field& F = *F_;
    const int q = F.q();
    // [x, y, z] = [x, 0, z + x y] * [0, y, 0]
    Op m(q * q, Scalar(0));
    int zz = F.add(z, F.mul(x, y));
    for (int xi = 0; xi < q; ++xi) {
        int eta = F.add(xi, x);
        m[xi * q + eta] = psi_eff(zz) * psi_eff(F.neg(F.mul(F.from_int(2), F.mul(eta, y))));
    }
    return m;
}

Op WeilRep::torus(int a) const {
    const Field& F = *F_;
    const int q = F.q();
    Op m(q * q, Scalar(0));
    for (int xi = 0; xi < q; ++xi) m[xi * q + F.mul(a, xi)] = F.eps(a);
    return m;
}

Op WeilRep::upper(int b) const {
    const Field& F = *F_;
    const int q = F.q();
    Op m(q * q, Scalar(0));
    for (int xi = 0; xi < q; ++xi)
        m[xi * q + xi] = psi_eff(F.neg(F.mul(b, F.mul(xi, xi))));
    return m;
}

Scalar WeilRep::gamma_factor(int b) const {
    const Field& F = *F_;
    // The normalization that makes the big-cell operator multiplicative is
    // 1 / sum_x psi(b x^2) (with the same character flavor as the kernel).
    Scalar s = 0;
    for (int x = 0; x < F.q(); ++x) s += psi_eff(F.mul(b, F.mul(x, x)));
    return s;
}

Op WeilRep::big_cell(int b) const {
    const Field& F = *F_;
    const int q = F.q();
    Scalar g = gamma_factor(b);
    Op m(q * q, Scalar(0));
    for (int xi = 0; xi < q; ++xi)
        for (int x = 0; x < q; ++x)
            m[xi * q + x] = psi_eff(F.neg(F.mul(F.from_int(2), F.mul(F.mul(x, b), xi)))) / g;
    return m;
}

Op WeilRep::sl2(GL2 g) const {
    const Field& F = *F_;
    if (gl2_det(F, g) != 1) throw std::invalid_argument("WeilRep::sl2: determinant must be 1");
    if (g.c == 0) {
        // g = diag(a, 1/a) n(b/a)
        return op_mul(F.q(), torus(g.a), upper(F.div(g.b, g.a)));
    }
    // g = n(a/c) A(-1/c) n(d/c) with A(b) = (0 b; -1/b 0)
    Op m = op_mul(F.q(), upper(F.div(g.a, g.c)), big_cell(F.neg(F.inv(g.c))));
    return op_mul(F.q(), m, upper(F.div(g.d, g.c)));
}

// ---------------------------------------------------------------------------
// J = SL2^beta x V inside G2
// ---------------------------------------------------------------------------

std::optional<JElement> extract_j(const G2& G, const Mat7& j) {
    const Field& F = G.field();
    JElement e;
    e.m = GL2{j.at(0, 0), j.at(0, 1), j.at(1, 0), j.at(1, 1)};
    if (gl2_det(F, e.m) != 1) return std::nullopt;
    Mat7 v = G.mul(G.inverse(G.sl2_beta_embed(e.m.a, e.m.b, e.m.c, e.m.d)), j);
    auto c = G.unipotent_coords(v);
    if (!c || (*c)[1] != 0) return std::nullopt;
    e.r = {(*c)[0], (*c)[2], (*c)[3], (*c)[4], (*c)[5]};
    return e;
}

Mat7 j_elt(const G2& G, const JElement& e) {
    return G.mul(G.sl2_beta_embed(e.m.a, e.m.b, e.m.c, e.m.d),
                 G.v_elt(e.r[0], e.r[1], e.r[2], e.r[3], e.r[4]));
}

JacobiElt prbar(const Field& F, const JElement& e) {
    JacobiElt out;
    out.g = GL2{e.m.a, F.neg(e.m.b), F.neg(e.m.c), e.m.d};
    out.x = e.r[0];
    out.y = e.r[1];
    out.z = F.sub(e.r[2], F.mul(e.r[0], e.r[1]));
    return out;
}

Op weil_on_j(const G2& G, const WeilRep& W, const Mat7& j) {
    auto e = extract_j(G, j);
    if (!e) throw std::invalid_argument("weil_on_j: matrix not in J");
    return W.jacobi(prbar(G.field(), *e));
}

// ---------------------------------------------------------------------------
// InducedRep
// ---------------------------------------------------------------------------

InducedRep::InducedRep(const Field& F, int chi_index) : F_(&F), chi_(chi_index) {}

std::pair<int, Scalar> InducedRep::coset(GL2 g) const {
    const Field& F = *F_;
    if (g.c == 0) return {0, F.mult_char(chi_, g.a)};
    int x = F.div(g.d, g.c);
    return {1 + x, F.mult_char(chi_, F.neg(F.inv(g.c)))};
}

GL2 InducedRep::coset_rep(int i) const {
    const Field& F = *F_;
    if (i == 0) return GL2{1, 0, 0, 1};
    int x = i - 1;
    // w n(x) with w = (0 1; -1 0)
    return GL2{0, 1, F.neg(1), F.neg(x)};
}

std::vector<Scalar> InducedRep::action(GL2 g) const {
    const int n = dim();
    std::vector<Scalar> m(n * n, Scalar(0));
    for (int i = 0; i < n; ++i) {
        auto [j, v] = coset(gl2_mul(*F_, coset_rep(i), g));
        m[i * n + j] += v;
    }
    return m;
}

std::vector<Scalar> InducedRep::intertwiner() const {
    const Field& F = *F_;
    const int n = dim();
    GL2 winv{0, F.neg(1), 1, 0};
    std::vector<Scalar> m(n * n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < F.q(); ++x) {
            GL2 s = gl2_mul(F, gl2_mul(F, winv, GL2{1, x, 0, 1}), coset_rep(i));
            auto [j, v] = coset(s);
            m[i * n + j] += v;
        }
    return m;
}

// ---------------------------------------------------------------------------
// Generic GL2 irreps
// ---------------------------------------------------------------------------

std::vector<Gl2Irrep> all_generic_gl2(const Field& F) {
    const int q = F.q();
    std::vector<Gl2Irrep> out;
    for (int j1 = 0; j1 < q - 1; ++j1)
        for (int j2 = j1 + 1; j2 < q - 1; ++j2) {
            Gl2Irrep pi;
            pi.type = Gl2Type::Principal;
            pi.j1 = j1;
            pi.j2 = j2;
            pi.dim = q + 1;
            out.push_back(pi);
        }
    for (int j = 0; j < q - 1; ++j) {
        Gl2Irrep pi;
        pi.type = Gl2Type::Steinberg;
        pi.j = j;
        pi.dim = q;
        out.push_back(pi);
    }
    const int n2 = q * q - 1;
    for (int jt = 1; jt < n2; ++jt) {
        if (jt % (q + 1) == 0) continue;          // theta^q == theta: not regular
        if ((jt * q) % n2 < jt) continue;         // Galois-orbit representative only
        Gl2Irrep pi;
        pi.type = Gl2Type::Cuspidal;
        pi.jt = jt;
        pi.dim = q - 1;
        out.push_back(pi);
    }
    return out;
}

Gl2Model::Gl2Model(const Field& F, const QuadField& K, const Gl2Irrep& pi, int psi_sign)
    : F_(&F), K_(&K), pi_(pi), sign_(psi_sign) {
    sqrt_tab_.assign(F.q(), -1);
    for (int x = 0; x < F.q(); ++x) {
        int s = F.mul(x, x);
        if (sqrt_tab_[s] < 0) sqrt_tab_[s] = x;
    }
    build_cosets();
    build_basis();
}

Scalar Gl2Model::psi_model(int x) const {
    return F_->psi(sign_ == 1 ? x : F_->neg(x));
}

Scalar Gl2Model::char_value(GL2 g) const {
    const Field& F = *F_;
    const QuadField& K = *K_;
    const int q = F.q();
    int det = gl2_det(F, g);
    if (det == 0) throw std::invalid_argument("char_value: singular");
    int tr = F.add(g.a, g.d);
    int half = F.inv(F.from_int(2));
    int disc = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), det));

    auto chi = [&](int j, int x) { return F.mult_char(j, x); };

    if (disc == 0) {
        int a = F.mul(tr, half);
        bool central = (g.b == 0 && g.c == 0 && g.a == g.d);
        switch (pi_.type) {
            case Gl2Type::Principal: {
                Scalar v = chi(pi_.j1, a) * chi(pi_.j2, a);
                return central ? Scalar(q + 1) * v : v;
            }
            case Gl2Type::Steinberg: {
                Scalar v = chi(pi_.j, F.mul(a, a));
                return central ? Scalar(q) * v : Scalar(0);
            }
            case Gl2Type::Cuspidal: {
                Scalar v = K.theta(pi_.jt, QE{a, 0});
                return central ? Scalar(q - 1) * v : -v;
            }
        }
    }
    if (sqrt_tab_[disc] >= 0) {
        int s = sqrt_tab_[disc];
        int e1 = F.mul(F.add(tr, s), half);
        int e2 = F.mul(F.sub(tr, s), half);
        switch (pi_.type) {
            case Gl2Type::Principal:
                return chi(pi_.j1, e1) * chi(pi_.j2, e2) + chi(pi_.j1, e2) * chi(pi_.j2, e1);
            case Gl2Type::Steinberg:
                return chi(pi_.j, F.mul(e1, e2));
            case Gl2Type::Cuspidal:
                return Scalar(0);
        }
    }
    // elliptic: eigenvalue (tr + s sqrt(kappa)) / 2 with s^2 = disc / kappa
    int s = sqrt_tab_[F.div(disc, F.kappa())];
    QE lam{F.mul(tr, half), F.mul(s, half)};
    switch (pi_.type) {
        case Gl2Type::Principal:
            return Scalar(0);
        case Gl2Type::Steinberg:
            return -F.mult_char(pi_.j, det);
        case Gl2Type::Cuspidal:
            return -(K.theta(pi_.jt, lam) + K.theta(pi_.jt, K.conj(lam)));
    }
    throw std::logic_error("unreachable");
}

Scalar Gl2Model::bessel(GL2 g) const {
    const Field& F = *F_;
    Scalar s = 0;
    for (int x = 0; x < F.q(); ++x) {
        GL2 gn{g.a, F.add(F.mul(g.a, x), g.b), g.c, F.add(F.mul(g.c, x), g.d)};
        s += std::conj(psi_model(x)) * char_value(gn);
    }
    return s / Scalar(F.q());
}

void Gl2Model::build_cosets() {
    const Field& F = *F_;
    const int q = F.q();
    auto key = [q](GL2 g) {
        return ((static_cast<long long>(g.a) * q + g.b) * q + g.c) * q + g.d;
    };
    for (int c = 1; c < q; ++c)
        for (int d = 0; d < q; ++d)
            for (int det = 1; det < q; ++det) {
                GL2 r{0, F.neg(F.div(det, c)), c, d};
                coset_lut_[key(r)] = static_cast<int>(cosets_.size());
                cosets_.push_back(r);
            }
    for (int a = 1; a < q; ++a)
        for (int d = 1; d < q; ++d) {
            GL2 r{a, 0, 0, d};
            coset_lut_[key(r)] = static_cast<int>(cosets_.size());
            cosets_.push_back(r);
        }
}

int Gl2Model::coset_of(GL2 g, int* x_out) const {
    const Field& F = *F_;
    const int q = F.q();
    int x;
    GL2 r;
    if (g.c != 0) {
        x = F.div(g.a, g.c);
        r = GL2{0, F.sub(g.b, F.mul(x, g.d)), g.c, g.d};
    } else {
        if (g.d == 0) throw std::invalid_argument("coset_of: singular");
        x = F.div(g.b, g.d);
        r = GL2{g.a, 0, 0, g.d};
    }
    if (x_out) *x_out = x;
    long long k = ((static_cast<long long>(r.a) * q + r.b) * q + r.c) * q + r.d;
    auto it = coset_lut_.find(k);
    if (it == coset_lut_.end()) throw std::runtime_error("coset_of: representative missing");
    return it->second;
}

Scalar Gl2Model::evaluate(const Vec& v, GL2 g) const {
    int x = 0;
    int i = coset_of(g, &x);
    return psi_model(x) * v[i];
}

Gl2Model::Vec Gl2Model::translate(const Vec& v, GL2 g0) const {
    Vec out(cosets_.size());
    for (size_t i = 0; i < cosets_.size(); ++i)
        out[i] = evaluate(v, gl2_mul(*F_, cosets_[i], g0));
    return out;
}

Gl2Model::Vec Gl2Model::bessel_vector() const {
    Vec out(cosets_.size());
    for (size_t i = 0; i < cosets_.size(); ++i) out[i] = bessel(cosets_[i]);
    return out;
}

void Gl2Model::build_basis() {
    const Field& F = *F_;
    Vec jv = bessel_vector();
    std::vector<Vec> ortho;
    auto dot = [](const Vec& x, const Vec& y) {
        Scalar s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
        return s;
    };
    for (GL2 g0 : all_gl2(F)) {
        if (static_cast<int>(basis_.size()) == pi_.dim) break;
        Vec cand = translate(jv, g0);
        Vec w = cand;
        for (const Vec& o : ortho) {
            Scalar c = dot(o, w);
            for (size_t i = 0; i < w.size(); ++i) w[i] -= c * o[i];
        }
        double n2 = std::real(dot(w, w));
        if (n2 < 1e-8) continue;
        double n = std::sqrt(n2);
        for (Scalar& z : w) z /= n;
        ortho.push_back(w);
        basis_.push_back(cand);
    }
    if (static_cast<int>(basis_.size()) != pi_.dim)
        throw std::runtime_error("Whittaker basis has wrong dimension");
}

Gl2Model::Vec Gl2Model::random_vector(std::mt19937& rng) const {
    std::normal_distribution<double> nd(0.0, 1.0);
    Vec out(cosets_.size(), Scalar(0));
    for (const Vec& b : basis_) {
        Scalar c(nd(rng), nd(rng));
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * b[i];
    }
    return out;
}

}  // namespace g2fq
