#include "g2fq/chartab.hpp"

#include "g2fq/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace g2fq {

std::vector<std::string> class_fn_names(const Field& F) {
    if (F.p() == 3)
        return {"chi12", "chi13", "chi14", "theta5", "theta10", "theta11", "theta12"};
    return {"X2", "X3", "X6", "Y1", "Y2", "Y3", "Y4"};
}

namespace {

[[noreturn]] void starred(const std::string& name, const std::string& family) {
    throw std::domain_error("class_fn_value: " + name + " is not printed on family '" +
                            family + "'");
}

// Fine row discriminators shared by every function: the square class of
// b * r3 on the n(b)-families, the cube class of b / r4 when r3 = 0, and the
// class of the solution t of t + 1/t = -2 - b r4^2 / r3^3 when r3 != 0.
struct FineRow {
    int r3 = 0;
    bool br3_square = false;  // nb-center / minus-nb with r3 != 0
    bool cube = false;        // nb-r4 with r3 = 0: b / r4 is a cube
    int tclass = 0;           // nb-r4 with r3 != 0: classify_t
};

FineRow fine_row(const Field& F, const QuadField& K, const ClassRecord& rec) {
    FineRow out;
    out.r3 = rec.rep.r[2];
    const std::string& f = rec.family;
    if (f == "nb-center" || f == "nb-r4" || f == "minus-nb") {
        int b = rec.rep.m.b;
        if (f == "minus-nb") b = F.neg(b);  // m = -n(b)
        if (f == "nb-r4") {
            int r4 = rec.rep.r[3];
            if (out.r3 == 0)
                out.cube = F.is_cube(F.div(b, r4));
            else
                out.tclass = classify_t(F, K, b, out.r3, r4);
        } else if (out.r3 != 0) {
            out.br3_square = F.legendre(F.mul(b, out.r3)) == 1;
        }
    }
    return out;
}

// The three unipotent characters away from characteristic 3 (and their
// characteristic-3 analogues), as one parametrized table: col = 0, 1, 2
// selects the (q+1)^2-, (q^2+q+1)-, (q^2-q+1)-denominator member.
Scalar x_family(const Field& F, const QuadField& K, int col, const ClassRecord& rec,
                Scalar unit, const std::string& name) {
    const double q = F.q();
    const std::string& f = rec.family;
    const FineRow fr = fine_row(F, K, rec);
    const bool mod1 = F.q() % 3 == 1;  // q = 1 mod 3 (never in characteristic 3)
    const bool p3 = F.p() == 3;

    // the recurring fine-row value triples
    const double deep[3] = {(q - 1) * (2 * q - 1), -(q * q - 1), -(q * q - 1)};
    const double cube3[3] = {-4 * q + 1, q + 1, -q + 1};
    const double noncube[3] = {-q + 1, -2 * q + 1, 2 * q + 1};
    const double quad[3] = {-2 * q + 1, -q + 1, q + 1};
    const double p3deep[3] = {2 * q * q - 2 * q + 1, -(q * q + q - 1), -(q * q - q - 1)};
    const double p3gen[3] = {-(2 * q - 1), -(q - 1), q + 1};

    if (f == "identity") {
        const double top = (q * q - 1) * (std::pow(q, 6) - 1);
        const double den[3] = {(q + 1) * (q + 1), q * q + q + 1, q * q - q + 1};
        return top / den[col];
    }
    if (f == "z-gen") {
        const double v[3] = {-(q - 1) * (q * q - q + 1), (q - 1) * (q * q - 1),
                             -(q + 1) * (q * q - 1)};
        return v[col];
    }
    if (f == "center") {
        if (p3) {  // central in characteristic 3; same value as the identity coset rep
            const double v[3] = {-(q - 1) * (q * q - q + 1), (q - 1) * (q * q - 1),
                                 -(q + 1) * (q * q - 1)};
            return v[col];
        }
        const double v[3] = {(q - 1) * (2 * q - 1), -(q * q - 1), -(q * q - 1)};
        return v[col];
    }
    if (f == "center-z") return p3deep[col];
    if (f == "nb-center") {
        if (fr.r3 == 0) {
            const double v[3] = {-(q - 1) * (q * q - q + 1), (q - 1) * (q * q - 1),
                                 -(q + 1) * (q * q - 1)};
            return v[col];
        }
        if (p3) return p3gen[col];
        if (mod1) return fr.br3_square ? cube3[col] : quad[col];
        return fr.br3_square ? quad[col] : cube3[col];
    }
    if (f == "nb-r4") {
        if (fr.r3 == 0) {
            if (p3) return p3gen[col];
            if (mod1) return fr.cube ? cube3[col] : noncube[col];
            return quad[col];
        }
        if (p3) return fr.tclass == 0 ? p3deep[col] : p3gen[col];
        if (fr.tclass == 0) return deep[col];
        if (mod1) {
            const double* rows[3] = {cube3, noncube, quad};
            return rows[fr.tclass - 1][col];
        }
        const double* rows[3] = {quad, cube3, noncube};
        return rows[fr.tclass - 1][col];
    }
    if (f == "minus-center") {
        if (col != 0) return 0;
        return (fr.r3 == 0 ? (q - 1) * (q - 1) : -(q - 1)) * unit;
    }
    if (f == "minus-nb") {
        if (col != 0) return 0;
        return (fr.r3 == 0 ? -(q - 1) : 1.0) * unit;
    }
    if (f == "split") return 0;
    starred(name, f);
}

// The four exceptional-series class functions away from characteristic 3.
Scalar y_family(const Field& F, const QuadField& K, int idx, const ClassRecord& rec,
                const std::string& name) {
    const double q = F.q();
    const std::string& f = rec.family;
    const bool printed = f == "identity" || f == "z-gen" || f == "center" ||
                         f == "nb-center" || f == "nb-r4" || f == "minus-center" ||
                         f == "minus-nb" || f == "split";
    if (!printed) starred(name, f);
    if (f == "split") return 0;
    const FineRow fr = fine_row(F, K, rec);
    if (idx == 2) {  // Y2: supported on h(-1,-1) n(b) x_{2a+b}(r3 != 0)
        if (f == "minus-nb" && fr.r3 != 0) return fr.br3_square ? q : -q;
        return 0;
    }
    if (idx == 3 || idx == 4) return 0;  // Y3, Y4: zero on every printed row
    // Y1
    const bool mod1 = F.q() % 3 == 1;
    if (f == "nb-center" && fr.r3 != 0) return fr.br3_square ? q * q : -q * q;
    if (f == "nb-r4") {
        if (fr.r3 == 0) return q * q;
        if (fr.tclass == 0) return 0;
        if (mod1) {
            const double v[3] = {q * q, q * q, -q * q};
            return v[fr.tclass - 1];
        }
        const double v[3] = {q * q, -q * q, -q * q};
        return v[fr.tclass - 1];
    }
    return 0;
}

// The four cuspidal-relevant theta characters in characteristic 3; idx in 5,
// 10, 11, 12.
Scalar theta_family(const Field& F, const QuadField& K, int idx, const ClassRecord& rec,
                    const std::string& name) {
    const double q = F.q();
    const std::string& f = rec.family;
    const FineRow fr = fine_row(F, K, rec);

    auto row = [&](double t5, double t10, double t11, double t12) -> Scalar {
        switch (idx) {
            case 5: return t5;
            case 10: return t10;
            case 11: return t11;
            default: return t12;
        }
    };

    if (f == "identity")
        return row(std::pow(q, 6), q * (q - 1) * (q - 1) * (q * q - q + 1) / 6,
                   q * (q - 1) * (q * q * q - 1) / 2, q * (q * q - 1) * (q * q - 1) / 3);
    const Scalar deep = row(0, -q * (3 * q - 1) / 6, -q * (q - 1) / 2, q / 3);
    const Scalar generic = row(0, q * (q + 1) / 6, -q * (q - 1) / 2, q * (q + 1) / 3);
    const Scalar outer = row(0, -q * (q - 1) / 6, q * (q + 1) / 2, -q * (q - 1) / 3);
    if (f == "z-gen" || f == "center" || (f == "nb-center" && fr.r3 == 0))
        return row(0, q * (q - 1) * (2 * q - 1) / 6, -q * (q - 1) / 2, -q * (q * q - 1) / 3);
    if (f == "center-z") return deep;
    if (f == "nb-center") return fr.br3_square ? generic : outer;
    if (f == "nb-r4") {
        if (fr.r3 == 0) return generic;
        // t in {+-1} lands in the G2-class of x_{2a+b}(1) x_{3a+2b}(1), so
        // this row repeats the deep value; with any other sign on the last
        // entry the theta12 multiplicity would not vanish.
        const Scalar v[3] = {deep, generic, outer};
        return v[fr.tclass];
    }
    if (f == "minus-center")
        return fr.r3 == 0
                   ? row(q * q, -(q - 1) * (q - 1) / 2, -(q - 1) * (q - 1) / 2, 0)
                   : row(0, (q - 1) / 2, (q - 1) / 2, 0);
    if (f == "minus-nb") {
        if (fr.r3 == 0) return row(0, (q - 1) / 2, (q - 1) / 2, 0);
        return fr.br3_square ? row(0, -(q + 1) / 2, (q - 1) / 2, 0)
                             : row(0, (q - 1) / 2, -(q + 1) / 2, 0);
    }
    if (f == "split") return fr.r3 == 0 ? row(q, 0, 0, 0) : 0;
    starred(name, f);
}

}  // namespace

Scalar class_fn_value(const Field& F, const QuadField& K, const std::string& name,
                      const ClassRecord& rec, Scalar unit) {
    const bool p3 = F.p() == 3;
    if (!p3) {
        if (name == "X2") return x_family(F, K, 0, rec, unit, name);
        if (name == "X3") return x_family(F, K, 1, rec, Scalar(1), name);
        if (name == "X6") return x_family(F, K, 2, rec, Scalar(1), name);
        if (name == "Y1") return y_family(F, K, 1, rec, name);
        if (name == "Y2") return y_family(F, K, 2, rec, name);
        if (name == "Y3") return y_family(F, K, 3, rec, name);
        if (name == "Y4") return y_family(F, K, 4, rec, name);
    } else {
        if (name == "chi12") return x_family(F, K, 0, rec, unit, name);
        if (name == "chi13") return x_family(F, K, 1, rec, Scalar(1), name);
        if (name == "chi14") return x_family(F, K, 2, rec, Scalar(1), name);
        if (name == "theta5") return theta_family(F, K, 5, rec, name);
        if (name == "theta10") return theta_family(F, K, 10, rec, name);
        if (name == "theta11") return theta_family(F, K, 11, rec, name);
        if (name == "theta12") return theta_family(F, K, 12, rec, name);
    }
    throw std::invalid_argument("class_fn_value: unknown function '" + name +
                                "' at q = " + std::to_string(F.q()));
}

std::vector<Scalar> char_column_direct(const G2& G, const ClassTable& T,
                                       const WeilRep& W, int chi_index) {
    const Field& F = G.field();
    InducedRep I(F, chi_index);
    std::vector<Scalar> out;
    out.reserve(T.records.size());
    for (const auto& rec : T.records)
        out.push_back(class_character(G, W, I, j_elt(G, rec.rep)));
    return out;
}

std::vector<Scalar> char_column_printed(const Field& F, const ClassTable& T, int chi_index) {
    std::vector<Scalar> out;
    out.reserve(T.records.size());
    for (const auto& rec : T.records) {
        auto v = printed_char(F, rec, chi_index);
        out.push_back(v ? *v : Scalar(0));
    }
    return out;
}

Scalar pairing(const Field& F, const QuadField& K, const ClassTable& T,
               const std::string& name, const std::vector<Scalar>& weights,
               Scalar unit) {
    if (weights.size() != T.records.size())
        throw std::invalid_argument("pairing: weight column size mismatch");
    Scalar acc = 0;
    for (size_t i = 0; i < T.records.size(); ++i) {
        if (std::abs(weights[i]) < 1e-9) continue;
        acc += double(T.records[i].class_size) *
               std::conj(class_fn_value(F, K, name, T.records[i], unit)) * weights[i];
    }
    return acc / double(T.group_order);
}

std::vector<ComboResult> combination_checks(const Field& F, const QuadField& K,
                                            const ClassTable& T,
                                            const std::vector<Scalar>& weights,
                                            int chi_index) {
    std::vector<ComboResult> out;
    auto pair = [&](const std::string& name) { return pairing(F, K, T, name, weights); };
    if (F.p() != 3) {
        out.push_back({"X17",
                       -pair("X2") / 6.0 + pair("X6") / 6.0 - pair("Y1") / 2.0 +
                           pair("Y2") / 2.0,
                       Scalar(0)});
        if (F.q() % 3 == 2)
            out.push_back({"X33", -pair("X2") / 3.0 + pair("X6") / 3.0, Scalar(0)});
    } else {
        out.push_back({"theta10", pair("theta10"), Scalar(0)});
        out.push_back({"theta11", pair("theta11"), Scalar(0)});
        out.push_back({"theta12", pair("theta12"), Scalar(0)});
        const bool quad = chi_index * 2 % (F.q() - 1) == 0 && chi_index != 0;
        out.push_back({"theta5", pair("theta5"), Scalar(quad ? 2 : 1)});
    }
    return out;
}

}  // namespace g2fq
