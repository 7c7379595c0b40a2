#include "g2fq/gauss.hpp"

#include <stdexcept>

namespace g2fq {

SumCase sum_case(const Field& F) {
    if (F.p() == 3) return SumCase::D;
    return (F.q() % 3 == 1) ? SumCase::B : SumCase::C;
}

int num_t_classes(SumCase c) { return c == SumCase::D ? 3 : 4; }

namespace {

// square root of a nonzero square: kappa^(log/2)
int field_sqrt(const Field& F, int a) {
    int l = F.dlog(a);
    if (l & 1) throw std::invalid_argument("field_sqrt: not a square");
    return F.pow(F.kappa(), l / 2);
}

}  // namespace

int classify_t(const Field& F, const QuadField& K, int r, int r3, int r4) {
    if (r == 0 || r3 == 0 || r4 == 0)
        throw std::invalid_argument("classify_t: parameters must be nonzero");
    // z = -2 - r r4^2 / r3^3
    int z = F.sub(F.neg(F.from_int(2)),
                  F.div(F.mul(r, F.mul(r4, r4)), F.mul(r3, F.mul(r3, r3))));
    int disc = F.sub(F.mul(z, z), F.from_int(4));
    SumCase c = sum_case(F);
    if (disc == 0) return 0;  // t = z/2 in {+-1}
    if (F.legendre(disc) == 1) {
        // t in k^x, t != +-1
        if (c != SumCase::B) return 1;
        int t = F.div(F.add(z, field_sqrt(F, disc)), F.from_int(2));
        return F.is_cube(t) ? 1 : 2;
    }
    // t in k2 - k; for q != 1 mod 3 it lies in the norm-one subgroup
    if (c == SumCase::B) return 3;
    if (c == SumCase::D) return 2;
    int s = field_sqrt(F, F.div(disc, F.kappa()));  // disc = kappa s^2
    int half = F.inv(F.from_int(2));
    QE t{F.mul(z, half), F.mul(s, half)};
    return K.is_cube(t) ? 2 : 3;
}

Scalar sum_A(const Field& F, int r, int a) {
    if (r == 0 || a == 0) throw std::invalid_argument("sum_A: zero parameter");
    Scalar s = 0;
    for (int x = 1; x < F.q(); ++x)
        if (F.legendre(x) == 1) s += F.psi(F.mul(a, F.mul(r, x)));
    return s;
}

std::vector<Scalar> family_sums(const Field& F, const QuadField& K, int r) {
    std::vector<Scalar> out(num_t_classes(sum_case(F)), Scalar(0));
    const int q = F.q();
    for (int r3 = 1; r3 < q; ++r3)
        for (int r4 = 1; r4 < q; ++r4) {
            if (r4 >= F.neg(r4)) continue;  // canonical half of k^x/{+-1}
            out[classify_t(F, K, r, r3, r4)] += F.psi(r3);
        }
    return out;
}

std::vector<Scalar> family_closed_diffs(const Field& F) {
    const Scalar root = F.sqrt_eps0_q();
    const double e0 = F.eps0();
    switch (sum_case(F)) {
        case SumCase::B:
            return {e0 * root, -0.5 * (1 + e0) * root, Scalar(0), 0.5 * (1 - e0) * root};
        case SumCase::C:
            return {e0 * root, -0.5 * (1 + e0) * root, 0.5 * (1 - e0) * root, Scalar(0)};
        case SumCase::D:
            return {e0 * root, -0.5 * (1 + e0) * root, 0.5 * (1 - e0) * root};
    }
    throw std::logic_error("unreachable");
}

std::vector<SumResult> sum_family(const Field& F, const QuadField& K) {
    std::vector<SumResult> out;
    out.push_back({"A", 0, sum_A(F, 1, 1) - sum_A(F, F.kappa(), 1), F.sqrt_eps0_q()});
    SumCase c = sum_case(F);
    std::string fam = c == SumCase::B ? "B" : c == SumCase::C ? "C" : "D";
    auto s1 = family_sums(F, K, 1);
    auto sk = family_sums(F, K, F.kappa());
    auto closed = family_closed_diffs(F);
    for (size_t i = 0; i < s1.size(); ++i)
        out.push_back({fam, (int)i, s1[i] - sk[i], closed[i]});
    return out;
}

}  // namespace g2fq
