#include "g2fq/g2core.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace g2fq {

namespace {

// Sparse description of a root element: identity plus entries c * r^deg at
// (row, col), all 0-based.
struct Entry { int row, col, coef, deg; };

const std::vector<Entry>& root_entries(int g) {
    static const std::vector<Entry> tab[12] = {
        /* alpha      */ {{1, 3, -2, 1}, {1, 5, -1, 2}, {3, 5, 1, 1}, {4, 0, -1, 1}, {6, 2, -1, 1}},
        /* beta       */ {{0, 1, 1, 1}, {5, 6, -1, 1}},
        /* a+b        */ {{0, 3, -2, 1}, {0, 6, -1, 2}, {3, 6, 1, 1}, {4, 1, 1, 1}, {5, 2, 1, 1}},
        /* 2a+b       */ {{0, 5, -1, 1}, {1, 6, 1, 1}, {3, 2, -1, 1}, {4, 2, 1, 2}, {4, 3, -2, 1}},
        /* 3a+b       */ {{1, 2, 1, 1}, {4, 5, 1, 1}},
        /* 3a+2b      */ {{0, 2, 1, 1}, {4, 6, 1, 1}},
        /* -alpha     */ {{0, 4, -1, 1}, {2, 6, -1, 1}, {3, 1, -1, 1}, {5, 1, -1, 2}, {5, 3, 2, 1}},
        /* -beta      */ {{1, 0, 1, 1}, {6, 5, -1, 1}},
        /* -(a+b)     */ {{1, 4, 1, 1}, {2, 5, 1, 1}, {3, 0, -1, 1}, {6, 0, -1, 2}, {6, 3, 2, 1}},
        /* -(2a+b)    */ {{2, 3, -2, 1}, {2, 4, 1, 2}, {3, 4, -1, 1}, {5, 0, -1, 1}, {6, 1, 1, 1}},
        /* -(3a+b)    */ {{2, 1, 1, 1}, {5, 4, 1, 1}},
        /* -(3a+2b)   */ {{2, 0, 1, 1}, {6, 4, 1, 1}},
    };
    return tab[g];
}

// Reordered basis in which positive root elements are strictly upper
// triangular: new position of each original index.
constexpr int kPos[7] = {1, 2, 6, 3, 0, 4, 5};

}  // namespace

std::pair<int, int> root_coeffs(int g) {
    static const std::pair<int, int> c[6] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    if (g < 6) return c[g];
    auto [m, n] = c[g - 6];
    return {-m, -n};
}

G2::G2(const Field& F) : F_(&F) {
    Q_ = Mat7{};
    Q_.at(0, 6) = 1;
    Q_.at(1, 5) = 1;
    Q_.at(2, 4) = F.neg(1);
    Q_.at(3, 3) = F.from_int(2);
    Q_.at(4, 2) = F.neg(1);
    Q_.at(5, 1) = 1;
    Q_.at(6, 0) = 1;
    build_weyl();
    measure_conj_signs();
}

Mat7 G2::identity() const {
    Mat7 g{};
    for (int i = 0; i < 7; ++i) g.at(i, i) = 1;
    return g;
}

Mat7 G2::mul(const Mat7& x, const Mat7& y) const {
    const Field& F = *F_;
    Mat7 z{};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            int v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < 7; ++j) {
                int w = y.at(k, j);
                if (w != 0) z.at(i, j) = F.add(z.at(i, j), F.mul(v, w));
            }
        }
    return z;
}

Mat7 G2::transpose(const Mat7& x) const {
    Mat7 z;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) z.at(i, j) = x.at(j, i);
    return z;
}

int G2::det(const Mat7& x) const {
    const Field& F = *F_;
    Mat7 a = x;
    int d = 1;
    for (int c = 0; c < 7; ++c) {
        int piv = -1;
        for (int r = c; r < 7; ++r)
            if (a.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < 7; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, a.at(c, c));
        int inv = F.inv(a.at(c, c));
        for (int r = c + 1; r < 7; ++r) {
            if (a.at(r, c) == 0) continue;
            int f = F.mul(a.at(r, c), inv);
            for (int j = c; j < 7; ++j) a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(c, j)));
        }
    }
    return d;
}

Mat7 G2::inverse(const Mat7& x) const {
    const Field& F = *F_;
    Mat7 a = x, b = identity();
    for (int c = 0; c < 7; ++c) {
        int piv = -1;
        for (int r = c; r < 7; ++r)
            if (a.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < 7; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(b.at(piv, j), b.at(c, j));
            }
        int inv = F.inv(a.at(c, c));
        for (int j = 0; j < 7; ++j) {
            a.at(c, j) = F.mul(a.at(c, j), inv);
            b.at(c, j) = F.mul(b.at(c, j), inv);
        }
        for (int r = 0; r < 7; ++r) {
            if (r == c || a.at(r, c) == 0) continue;
            int f = a.at(r, c);
            for (int j = 0; j < 7; ++j) {
                a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(c, j)));
                b.at(r, j) = F.sub(b.at(r, j), F.mul(f, b.at(c, j)));
            }
        }
    }
    return b;
}

bool G2::preserves_form(const Mat7& g) const {
    return mul(transpose(g), mul(Q_, g)) == Q_ && det(g) == 1;
}

Mat7 G2::root_elt(int g, int r) const {
    const Field& F = *F_;
    Mat7 z = identity();
    for (const Entry& e : root_entries(g)) {
        int v = F.mul(F.from_int(e.coef), e.deg == 1 ? r : F.mul(r, r));
        z.at(e.row, e.col) = F.add(z.at(e.row, e.col), v);
    }
    return z;
}

Mat7 G2::weyl_gen(int g, int t) const {
    const Field& F = *F_;
    return mul(root_elt(g, t), mul(root_elt(neg_root(g), F.neg(F.inv(t))), root_elt(g, t)));
}

Mat7 G2::h_single(int g, int t) const {
    return mul(weyl_gen(g, t), inverse(weyl_gen(g, 1)));
}

Mat7 G2::h_elt(int a, int b) const {
    const Field& F = *F_;
    Mat7 z{};
    int ab = F.mul(a, b);
    z.at(0, 0) = a;
    z.at(1, 1) = b;
    z.at(2, 2) = F.inv(ab);
    z.at(3, 3) = 1;
    z.at(4, 4) = ab;
    z.at(5, 5) = F.inv(b);
    z.at(6, 6) = F.inv(a);
    return z;
}

int G2::root_value(int g, int a, int b) const {
    const Field& F = *F_;
    auto [m, n] = root_coeffs(g);
    auto pw = [&](int x, int e) {
        if (e >= 0) return F.pow(x, e);
        return F.inv(F.pow(x, -e));
    };
    return F.mul(pw(a, n), pw(b, m - n));
}

Mat7 G2::v_elt(int r1, int r2, int r3, int r4, int r5) const {
    Mat7 z = root_elt(rA, r1);
    z = mul(z, root_elt(rAB, r2));
    z = mul(z, root_elt(rA2B, r3));
    z = mul(z, root_elt(rA3B, r4));
    z = mul(z, root_elt(rA3B2, r5));
    return z;
}

Mat7 G2::to_new_basis(const Mat7& g) const {
    Mat7 z;
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) z.at(kPos[r], kPos[c]) = g.at(r, c);
    return z;
}

Mat7 G2::to_old_basis(const Mat7& g) const {
    Mat7 z;
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) z.at(r, c) = g.at(kPos[r], kPos[c]);
    return z;
}

void G2::build_weyl() {
    // Simple reflections acting on root coefficients (m, n):
    //   s_alpha: (m, n) -> (3n - m, n);  s_beta: (m, n) -> (m, m - n).
    const std::array<std::array<int, 2>, 2> gen_act[2] = {
        {{{-1, 3}, {0, 1}}},
        {{{1, 0}, {1, -1}}},
    };
    const Mat7 gen_rep[2] = {weyl_gen(rA, 1), weyl_gen(rB, 1)};

    auto compose = [](const std::array<std::array<int, 2>, 2>& x,
                      const std::array<std::array<int, 2>, 2>& y) {
        std::array<std::array<int, 2>, 2> z{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    auto key_of = [](const std::array<std::array<int, 2>, 2>& a) {
        return std::array<int, 4>{a[0][0], a[0][1], a[1][0], a[1][1]};
    };

    std::map<std::array<int, 4>, int> seen;
    WeylElt id;
    id.length = 0;
    id.rep = identity();
    id.act = {{{1, 0}, {0, 1}}};
    weyl_.push_back(id);
    seen[key_of(id.act)] = 0;

    for (size_t head = 0; head < weyl_.size(); ++head) {
        for (int g = 0; g < 2; ++g) {
            // Copy, not reference: push_back below may reallocate weyl_.
            WeylElt cur = weyl_[head];
            WeylElt nxt;
            nxt.act = compose(gen_act[g], cur.act);
            auto k = key_of(nxt.act);
            if (seen.count(k)) continue;
            nxt.word = cur.word;
            nxt.word.insert(nxt.word.begin(), g);
            nxt.length = cur.length + 1;
            nxt.rep = mul(gen_rep[g], cur.rep);
            seen[k] = static_cast<int>(weyl_.size());
            weyl_.push_back(nxt);
        }
    }
    if (weyl_.size() != 12) throw std::runtime_error("Weyl group generation failed");

    for (WeylElt& w : weyl_) {
        w.rep_inv = inverse(w.rep);
        Mat7 rn = to_new_basis(w.rep);
        for (int j = 0; j < 7; ++j) {
            w.pattern[j] = -1;
            for (int i = 0; i < 7; ++i)
                if (rn.at(i, j) != 0) {
                    if (w.pattern[j] != -1) throw std::runtime_error("non-monomial Weyl rep");
                    w.pattern[j] = i;
                }
        }
        for (int g = 0; g < 6; ++g) {
            auto [m, n] = root_coeffs(g);
            int mm = w.act[0][0] * m + w.act[0][1] * n;
            int nn = w.act[1][0] * m + w.act[1][1] * n;
            if (mm < 0 || nn < 0) w.sent_negative.push_back(g);
        }
        if (static_cast<int>(w.sent_negative.size()) != w.length)
            throw std::runtime_error("length/inversion-set mismatch");
    }
}

int G2::longest_weyl() const {
    for (int i = 0; i < 12; ++i)
        if (weyl_[i].length == 6) return i;
    throw std::logic_error("unreachable");
}

int G2::weyl_on_root(int w, int g) const {
    auto [m, n] = root_coeffs(g);
    const auto& a = weyl_[w].act;
    int mm = a[0][0] * m + a[0][1] * n;
    int nn = a[1][0] * m + a[1][1] * n;
    for (int d = 0; d < 12; ++d) {
        auto [dm, dn] = root_coeffs(d);
        if (dm == mm && dn == nn) return d;
    }
    throw std::runtime_error("Weyl image is not a root");
}

void G2::measure_conj_signs() {
    const Field& F = *F_;
    for (int w = 0; w < 12; ++w)
        for (int g = 0; g < 12; ++g) {
            Mat7 m = mul(weyl_[w].rep, mul(root_elt(g, 1), weyl_[w].rep_inv));
            int d = weyl_on_root(w, g);
            if (m == root_elt(d, 1))
                conj_sign_[w][g] = 1;
            else if (m == root_elt(d, F.neg(1)))
                conj_sign_[w][g] = -1;
            else
                throw std::runtime_error("Weyl conjugation is not a signed root map");
        }
}

std::array<int, 7> G2::pivot_pattern(const Mat7& g_new) const {
    const Field& F = *F_;
    Mat7 m = g_new;
    std::array<int, 7> pat{};
    for (int j = 0; j < 7; ++j) {
        int r = -1;
        for (int i = 6; i >= 0; --i)
            if (m.at(i, j) != 0) { r = i; break; }
        if (r < 0) throw std::runtime_error("singular matrix in pivot pattern");
        pat[j] = r;
        int inv = F.inv(m.at(r, j));
        for (int jj = j + 1; jj < 7; ++jj) {
            if (m.at(r, jj) == 0) continue;
            int f = F.mul(m.at(r, jj), inv);
            for (int i = 0; i < 7; ++i) m.at(i, jj) = F.sub(m.at(i, jj), F.mul(f, m.at(i, j)));
        }
    }
    return pat;
}

std::optional<Bruhat> G2::bruhat(const Mat7& g) const {
    const Field& F = *F_;
    if (!preserves_form(g)) return std::nullopt;

    std::array<int, 7> pat;
    try {
        pat = pivot_pattern(to_new_basis(g));
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
    int w = -1;
    for (int i = 0; i < 12; ++i)
        if (weyl_[i].pattern == pat) { w = i; break; }
    if (w < 0) return std::nullopt;

    // g * rep^{-1} = (u t) * (rep u' rep^{-1}) is upper * lower-unitriangular
    // in the reordered basis; recover both factors by UL factorization.
    Mat7 M = to_new_basis(mul(g, weyl_[w].rep_inv));
    Mat7 U{}, L{};
    for (int i = 6; i >= 0; --i) {
        for (int j = 6; j >= i; --j) {
            int s = M.at(i, j);
            for (int k = j + 1; k < 7; ++k) s = F.sub(s, F.mul(U.at(i, k), L.at(k, j)));
            U.at(i, j) = s;
        }
        if (U.at(i, i) == 0) return std::nullopt;
        L.at(i, i) = 1;
        int inv = F.inv(U.at(i, i));
        for (int j = i - 1; j >= 0; --j) {
            int s = M.at(i, j);
            for (int k = i + 1; k < 7; ++k) s = F.sub(s, F.mul(U.at(i, k), L.at(k, j)));
            L.at(i, j) = F.mul(s, inv);
        }
    }

    Bruhat out;
    out.w = w;
    out.a = U.at(kPos[0], kPos[0]);
    out.b = U.at(kPos[1], kPos[1]);
    // The torus factor must be of the form h(a, b).
    Mat7 t = h_elt(out.a, out.b);
    Mat7 tn = to_new_basis(t);
    for (int i = 0; i < 7; ++i)
        if (tn.at(i, i) != U.at(i, i)) return std::nullopt;

    // u = U * t^{-1} in the new basis.
    Mat7 u_new{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) u_new.at(i, j) = F.mul(U.at(i, j), F.inv(tn.at(j, j)));

    out.u = to_old_basis(u_new);
    out.uprime = mul(weyl_[w].rep_inv, mul(to_old_basis(L), weyl_[w].rep));
    if (!unipotent_coords(out.u)) return std::nullopt;
    if (!unipotent_coords(out.uprime)) return std::nullopt;
    return out;
}

bool G2::in_group(const Mat7& g) const { return bruhat(g).has_value(); }

std::optional<std::array<int, 6>> G2::unipotent_coords(const Mat7& u) const {
    const Field& F = *F_;
    std::array<int, 6> c{};
    Mat7 v = u;
    c[0] = v.at(3, 5);  // alpha coordinate
    c[1] = v.at(0, 1);  // beta coordinate
    v = mul(root_elt(rB, F.neg(c[1])), mul(root_elt(rA, F.neg(c[0])), v));
    c[2] = v.at(3, 6);
    v = mul(root_elt(rAB, F.neg(c[2])), v);
    c[3] = v.at(1, 6);
    v = mul(root_elt(rA2B, F.neg(c[3])), v);
    c[4] = v.at(1, 2);
    v = mul(root_elt(rA3B, F.neg(c[4])), v);
    c[5] = v.at(0, 2);
    v = mul(root_elt(rA3B2, F.neg(c[5])), v);
    if (!(v == identity())) return std::nullopt;
    return c;
}

std::optional<G2::UFactor> G2::factor_mod_uh(const Mat7& u) const {
    const Field& F = *F_;
    UFactor out;
    out.c2 = u.at(3, 6);
    Mat7 u1 = mul(u, root_elt(rAB, F.neg(out.c2)));
    out.c1 = u1.at(3, 5);
    out.uh = mul(u1, root_elt(rA, F.neg(out.c1)));
    if (!uh_coords(out.uh)) return std::nullopt;
    return out;
}

std::optional<G2::UHCoords> G2::uh_coords(const Mat7& u) const {
    const Field& F = *F_;
    UHCoords c;
    c.b = u.at(0, 1);
    Mat7 z = mul(root_elt(rB, F.neg(c.b)), u);
    c.r3 = F.neg(z.at(3, 2));
    c.r4 = z.at(1, 2);
    c.r5 = z.at(0, 2);
    Mat7 chk = mul(root_elt(rA2B, c.r3), mul(root_elt(rA3B, c.r4), root_elt(rA3B2, c.r5)));
    if (!(chk == z)) return std::nullopt;
    return c;
}

Mat7 G2::gl2_embed(int a, int b, int c, int d) const {
    const Field& F = *F_;
    int det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det == 0) throw std::invalid_argument("gl2_embed: singular matrix");
    int di = F.inv(det);
    Mat7 z{};
    z.at(0, 0) = a;
    z.at(0, 1) = b;
    z.at(1, 0) = c;
    z.at(1, 1) = d;
    z.at(2, 2) = di;
    z.at(3, 3) = 1;
    z.at(4, 4) = det;
    z.at(5, 5) = F.mul(di, a);
    z.at(5, 6) = F.neg(F.mul(di, b));
    z.at(6, 5) = F.neg(F.mul(di, c));
    z.at(6, 6) = F.mul(di, d);
    return z;
}

Mat7 G2::sl2_beta_embed(int a, int b, int c, int d) const {
    const Field& F = *F_;
    if (F.sub(F.mul(a, d), F.mul(b, c)) != 1)
        throw std::invalid_argument("sl2_beta_embed: determinant must be 1");
    return gl2_embed(a, b, c, d);
}

std::vector<Mat7> G2::cell_unipotents(int w) const {
    const int q = F_->q();
    const auto& roots = weyl_[w].sent_negative;
    std::vector<Mat7> out;
    int n = static_cast<int>(roots.size());
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    out.reserve(total);
    std::vector<int> idx(n, 0);
    for (long long it = 0; it < total; ++it) {
        Mat7 z = identity();
        for (int i = 0; i < n; ++i) z = mul(z, root_elt(roots[i], idx[i]));
        out.push_back(z);
        for (int i = 0; i < n; ++i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
    }
    return out;
}

std::vector<Mat7> G2::full_unipotent() const {
    const int q = F_->q();
    std::vector<Mat7> out;
    out.reserve(static_cast<size_t>(q) * q * q * q * q * q);
    std::array<int, 6> idx{};
    const int order[6] = {rA, rB, rAB, rA2B, rA3B, rA3B2};
    while (true) {
        Mat7 z = identity();
        for (int i = 0; i < 6; ++i) z = mul(z, root_elt(order[i], idx[i]));
        out.push_back(z);
        int i = 0;
        for (; i < 6; ++i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
        if (i == 6) break;
    }
    return out;
}

std::vector<Mat7> G2::coset_reps(Cosets which) const {
    const int q = F_->q();
    std::vector<Mat7> out;
    std::vector<std::vector<Mat7>> cells(12);
    for (int w = 0; w < 12; ++w) cells[w] = cell_unipotents(w);

    auto emit_b = [&](const Mat7& pre) {
        for (int w = 0; w < 12; ++w) {
            Mat7 base = mul(pre, weyl_[w].rep);
            for (const Mat7& up : cells[w]) out.push_back(mul(base, up));
        }
    };
    auto emit_u = [&](const Mat7& pre) {
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) emit_b(mul(pre, h_elt(a, b)));
    };

    switch (which) {
        case Cosets::B:
            emit_b(identity());
            break;
        case Cosets::U:
            emit_u(identity());
            break;
        case Cosets::UH:
            for (int c1 = 0; c1 < q; ++c1)
                for (int c2 = 0; c2 < q; ++c2)
                    emit_u(mul(root_elt(rA, c1), root_elt(rAB, c2)));
            break;
    }
    return out;
}

Mat7 G2::canonical_rep(Cosets which, const Mat7& g) const {
    auto br = bruhat(g);
    if (!br) throw std::invalid_argument("canonical_rep: element not in the group");
    Mat7 tail = mul(weyl_[br->w].rep, br->uprime);
    switch (which) {
        case Cosets::B:
            return tail;
        case Cosets::U:
            return mul(h_elt(br->a, br->b), tail);
        case Cosets::UH: {
            auto f = factor_mod_uh(br->u);
            if (!f) throw std::runtime_error("canonical_rep: U factorization failed");
            Mat7 pre = mul(root_elt(rA, f->c1), root_elt(rAB, f->c2));
            return mul(pre, mul(h_elt(br->a, br->b), tail));
        }
    }
    throw std::logic_error("unreachable");
}

int G2::coset_index(Cosets which, const Mat7& g) const {
    auto& lut = coset_lookup_[static_cast<int>(which)];
    if (lut.empty()) {
        auto reps = coset_reps(which);
        lut.reserve(reps.size());
        for (size_t i = 0; i < reps.size(); ++i) lut.emplace(reps[i], static_cast<int>(i));
    }
    auto it = lut.find(canonical_rep(which, g));
    if (it == lut.end()) throw std::runtime_error("coset_index: representative not found");
    return it->second;
}

std::uint64_t G2::census() const {
    const int q = F_->q();
    if (q > 5) throw std::invalid_argument("census: q too large for direct enumeration");
    std::vector<Mat7> left = full_unipotent();
    std::vector<Mat7> right = coset_reps(Cosets::U);

    std::vector<unsigned __int128> keys;
    keys.reserve(left.size() * right.size());
    for (const Mat7& u : left)
        for (const Mat7& r : right) {
            Mat7 g = mul(u, r);
            unsigned __int128 k = 0;
            for (int i = 0; i < 49; ++i) k = k * q + g.m[i];
            keys.push_back(k);
        }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys.size();
}

}  // namespace g2fq
