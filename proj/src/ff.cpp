#include "g2fq/ff.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace g2fq {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- small polynomial arithmetic over F_p, used only while building tables ---

using Poly = std::vector<int>;  // coefficients, low degree first

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(c));
}

// Reduce a modulo the monic polynomial x^f + sum m_i x^i.
Poly poly_mod(Poly a, const Poly& mod_low, int f, int p) {
    for (int d = static_cast<int>(a.size()) - 1; d >= f; --d) {
        int c = a[d];
        if (c == 0) continue;
        a[d] = 0;
        for (int i = 0; i < f; ++i)
            a[d - f + i] = ((a[d - f + i] - c * mod_low[i]) % p + p) % p;
    }
    a.resize(f);
    return a;
}

Poly poly_powmod(Poly base, long long e, const Poly& mod_low, int f, int p) {
    Poly r(f, 0);
    r[0] = 1;
    base = poly_mod(std::move(base), mod_low, f, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), mod_low, f, p);
        base = poly_mod(poly_mul(base, base, p), mod_low, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // a mod b with b made monic
        int lead = b.back();
        int inv_lead = 1;
        for (int t = 1; t < p; ++t)
            if (t * lead % p == 1) { inv_lead = t; break; }
        while (a.size() >= b.size() && !a.empty()) {
            int c = a.back() * inv_lead % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
            a = poly_trim(std::move(a));
        }
        std::swap(a, b);
    }
    return a;
}

// Irreducibility of the monic polynomial x^f + sum m_i x^i over F_p:
// x^(p^f) == x mod m, and gcd(x^(p^(f/l)) - x, m) = 1 for prime l | f.
bool is_irreducible(const Poly& mod_low, int f, int p) {
    auto pow_pk = [&](int k) {
        Poly x = {0, 1};
        long long e = 1;
        for (int i = 0; i < k; ++i) e *= p;
        return poly_powmod(x, e, mod_low, f, p);
    };
    Poly xpf = pow_pk(f);
    // must equal x
    Poly x(f, 0);
    if (f >= 2) x[1] = 1;
    if (poly_trim(xpf) != poly_trim(x)) return false;
    Poly full = mod_low;
    full.resize(f + 1, 0);
    full[f] = 1;
    for (int l = 2; l <= f; ++l) {
        if (f % l != 0 || !is_prime(l)) continue;
        Poly y = pow_pk(f / l);
        // y - x
        Poly d = y;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        Poly g = poly_gcd(full, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(int p, int f) : p_(p), f_(f) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("Field: p must be an odd prime");
    if (f < 1) throw std::invalid_argument("Field: f must be positive");
    long long q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > (1 << 16)) throw std::invalid_argument("Field: p^f exceeds 2^16");
    }
    q_ = static_cast<int>(q);

    // Modulus: lexicographically least irreducible monic polynomial, scanning
    // codes of the low-coefficient vector in increasing order.
    if (f_ > 1) {
        for (int code = 0; code < q_; ++code) {
            Poly low(f_);
            int c = code;
            for (int i = 0; i < f_; ++i) { low[i] = c % p_; c /= p_; }
            if (is_irreducible(low, f_, p_)) { modulus_ = low; break; }
        }
        if (modulus_.empty()) throw std::runtime_error("Field: no irreducible modulus found");
    }

    auto code_to_poly = [&](int code) {
        Poly a(f_);
        for (int i = 0; i < f_; ++i) { a[i] = code % p_; code /= p_; }
        return a;
    };
    auto poly_to_code = [&](const Poly& a) {
        int code = 0;
        for (int i = f_ - 1; i >= 0; --i) code = code * p_ + (i < static_cast<int>(a.size()) ? a[i] : 0);
        return code;
    };
    auto mul_codes = [&](int a, int b) {
        if (f_ == 1) return a * b % p_;
        return poly_to_code(poly_mod(poly_mul(code_to_poly(a), code_to_poly(b), p_), modulus_, f_, p_));
    };

    // kappa: smallest primitive element under the code order.
    for (int cand = 2; cand < q_; ++cand) {
        int x = cand;
        int ord = 1;
        while (x != 1) { x = mul_codes(x, cand); ++ord; }
        if (ord == q_ - 1) { kappa_ = cand; break; }
    }
    if (kappa_ == 0) throw std::runtime_error("Field: no generator found");

    exp_tab_.resize(q_ - 1);
    log_tab_.assign(q_, -1);
    int x = 1;
    for (int m = 0; m < q_ - 1; ++m) {
        exp_tab_[m] = x;
        log_tab_[x] = m;
        x = mul_codes(x, kappa_);
    }

    neg_tab_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int code = 0, base = 1, v = a;
        for (int i = 0; i < f_; ++i) {
            int d = v % p_;
            v /= p_;
            code += ((p_ - d) % p_) * base;
            base *= p_;
        }
        neg_tab_[a] = code;
    }

    if (f_ > 1 && q_ <= 256) {
        add_tab_.resize(static_cast<size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                add_tab_[a * q_ + b] = add_slow(a, b);
    }

    // Trace table: Tr(x) = x + x^p + ... + x^(p^(f-1)), landing in F_p.
    trace_tab_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int s = 0;
        int t = a;
        for (int i = 0; i < f_; ++i) {
            s = add(s, t);
            t = pow(t, p_);
        }
        trace_tab_[a] = s % p_;  // element of the prime field: code == residue
    }

    psi_tab_.resize(p_);
    for (int t = 0; t < p_; ++t) {
        double ang = 2.0 * std::numbers::pi * t / p_;
        psi_tab_[t] = Scalar(std::cos(ang), std::sin(ang));
    }

    // Measure eps_psi from the literal quadratic Gauss sum at a = 1.
    eps_psi_ = gauss_quad(1) / std::sqrt(static_cast<double>(q_));
}

int Field::add_slow(int a, int b) const {
    int code = 0, base = 1;
    for (int i = 0; i < f_; ++i) {
        int d = (a % p_ + b % p_) % p_;
        a /= p_;
        b /= p_;
        code += d * base;
        base *= p_;
    }
    return code;
}

int Field::inv(int a) const {
    if (a == 0) throw std::invalid_argument("Field::inv(0)");
    int m = log_tab_[a];
    return exp_tab_[m == 0 ? 0 : q_ - 1 - m];
}

int Field::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::invalid_argument("Field::pow: 0 to a negative power");
        return 0;
    }
    long long m = (log_tab_[a] * (e % (q_ - 1))) % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_tab_[m];
}

int Field::dlog(int a) const {
    if (a == 0) throw std::invalid_argument("Field::dlog(0)");
    return log_tab_[a];
}

int Field::mult_order(int a) const {
    if (a == 0) throw std::invalid_argument("Field::mult_order(0)");
    int m = log_tab_[a];
    if (m == 0) return 1;
    return (q_ - 1) / std::gcd(q_ - 1, m);
}

Scalar Field::mult_char(int j, int x) const {
    if (x == 0) throw std::invalid_argument("Field::mult_char at 0");
    double ang = 2.0 * std::numbers::pi * j * log_tab_[x] / (q_ - 1);
    return Scalar(std::cos(ang), std::sin(ang));
}

Scalar Field::gauss_quad(int a) const {
    if (a == 0) throw std::invalid_argument("Field::gauss_quad(0)");
    Scalar s = 0;
    for (int x = 0; x < q_; ++x) s += psi(mul(a, mul(x, x)));
    return s;
}

bool Field::is_cube(int x) const {
    if (x == 0) throw std::invalid_argument("Field::is_cube(0)");
    if ((q_ - 1) % 3 != 0) return true;
    return log_tab_[x] % 3 == 0;
}

QuadField::QuadField(const Field& F) : F_(&F) {
    int q = F.q();
    long long qq = static_cast<long long>(q) * q;
    if (qq - 1 > (1 << 20)) throw std::invalid_argument("QuadField: q^2 too large for tables");

    // Generator of k2^x: smallest (a, b) under code order a*q + b with full order.
    auto order = [&](QE u) {
        QE x = u;
        int ord = 1;
        while (!(x.a == 1 && x.b == 0)) { x = mul(x, u); ++ord; }
        return ord;
    };
    bool found = false;
    for (int code = 1; code < q * q && !found; ++code) {
        QE u{code / q, code % q};
        if (is_zero(u)) continue;
        if (order(u) == qq - 1) { gen_ = u; found = true; }
    }
    if (!found) throw std::runtime_error("QuadField: no generator found");

    log2_.assign(q * q, -1);
    QE x = one();
    for (long long m = 0; m < qq - 1; ++m) {
        log2_[x.a * q + x.b] = static_cast<int>(m);
        x = mul(x, gen_);
    }

    // Norm-one subgroup: generated by gen_^(q-1) (norm is the (q-1)-power map
    // composed with... Nm(gen^(q-1)) = gen^((q-1)(q+1)) = 1).
    QE g1 = pow(gen_, q - 1);
    norm_one_.push_back(g1);
    QE y = mul(g1, g1);
    while (!(y == g1)) { norm_one_.push_back(y); y = mul(y, g1); }
}

QE QuadField::mul(QE u, QE v) const {
    const Field& F = *F_;
    int k = F.kappa();
    return QE{F.add(F.mul(u.a, v.a), F.mul(k, F.mul(u.b, v.b))),
              F.add(F.mul(u.a, v.b), F.mul(u.b, v.a))};
}

QE QuadField::pow(QE u, long long e) const {
    bool invert = e < 0;
    if (invert) e = -e;
    QE r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, u);
        u = mul(u, u);
        e >>= 1;
    }
    return invert ? inv(r) : r;
}

QE QuadField::inv(QE u) const {
    if (is_zero(u)) throw std::invalid_argument("QuadField::inv(0)");
    const Field& F = *F_;
    int n = norm(u);
    int ninv = F.inv(n);
    return QE{F.mul(u.a, ninv), F.mul(F.neg(u.b), ninv)};
}

int QuadField::norm(QE u) const {
    const Field& F = *F_;
    return F.sub(F.mul(u.a, u.a), F.mul(F.kappa(), F.mul(u.b, u.b)));
}

bool QuadField::is_cube(QE u) const {
    if (is_zero(u)) throw std::invalid_argument("QuadField::is_cube(0)");
    long long n = static_cast<long long>(F_->q()) * F_->q() - 1;
    if (n % 3 != 0) return true;
    QE r = pow(u, n / 3);
    return r == one();
}

int QuadField::dlog(QE u) const {
    if (is_zero(u)) throw std::invalid_argument("QuadField::dlog(0)");
    return log2_[u.a * F_->q() + u.b];
}

Scalar QuadField::theta(int j, QE u) const {
    long long n = static_cast<long long>(F_->q()) * F_->q() - 1;
    double ang = 2.0 * std::numbers::pi * j * dlog(u) / static_cast<double>(n);
    return Scalar(std::cos(ang), std::sin(ang));
}

}  // namespace g2fq
