#include "g2fq/jclasses.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace g2fq {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long j_order(int q) { return pow_ll(q, 6) * ((long long)q * q - 1); }

// F_p-basis of the additive group of k: powers of the primitive element.
std::vector<int> additive_basis(const Field& F) {
    std::vector<int> basis;
    for (int i = 0; i < F.f(); ++i) basis.push_back(F.pow(F.kappa(), i));
    return basis;
}

long long encode_gl2(int q, GL2 g) {
    return ((((long long)g.a * q + g.b) * q + g.c) * q) + g.d;
}

}  // namespace

std::vector<Sl2Class> sl2_classes(const Field& F) {
    const int q = F.q();
    const long long order = (long long)q * ((long long)q * q - 1);
    const int m1 = F.neg(1);
    const int kap = F.kappa();

    std::vector<GL2> full_gens;
    for (int c : additive_basis(F)) {
        full_gens.push_back(GL2{1, c, 0, 1});
        full_gens.push_back(GL2{1, 0, c, 1});
    }

    std::vector<Sl2Class> out;
    out.push_back({GL2{1, 0, 0, 1}, 1, "1", full_gens, order});
    out.push_back({GL2{m1, 0, 0, m1}, 1, "-1", full_gens, order});

    for (int s : {1, m1})
        for (int b : {1, kap}) {
            std::vector<GL2> gens{GL2{m1, 0, 0, m1}};
            for (int c : additive_basis(F)) gens.push_back(GL2{1, c, 0, 1});
            std::string label = (s == 1 ? "n(" : "-n(") + std::to_string(b) + ")";
            out.push_back({GL2{s, F.mul(s, b), 0, s},
                           ((long long)q * q - 1) / 2, label, gens, 2LL * q});
        }

    // split semisimple diag(x, 1/x), x != 0, +-1, one of {x, 1/x} per class
    GL2 torus_gen{kap, 0, 0, F.inv(kap)};
    std::vector<char> seen(q, 0);
    for (int x = 2; x < q; ++x) {
        if (x == m1 || seen[x]) continue;
        seen[x] = seen[F.inv(x)] = 1;
        out.push_back({GL2{x, 0, 0, F.inv(x)}, (long long)q * (q + 1),
                       "split", {torus_gen}, q - 1});
    }

    // elliptic (x, y; kappa*y, x) with x^2 - kappa*y^2 = 1 and y != 0,
    // identified with (x, -y); the centralizer is the nonsplit torus,
    // generated by the image of a norm-one generator of k2.
    QuadField K(F);
    QE g1 = K.norm_one_generator();
    GL2 ell_gen{g1.a, g1.b, F.mul(kap, g1.b), g1.a};
    std::set<std::pair<int, int>> picked;
    for (const QE& u : K.norm_one()) {
        if (u.b == 0) continue;
        int yc = std::min(u.b, F.neg(u.b));
        if (!picked.insert({u.a, yc}).second) continue;
        out.push_back({GL2{u.a, yc, F.mul(kap, yc), u.a}, (long long)q * (q - 1),
                       "elliptic", {ell_gen}, q + 1});
    }

    long long mass = 0;
    for (const auto& c : out) mass += c.size;
    if (mass != order || (int)out.size() != q + 4)
        throw std::logic_error("sl2_classes: bad partition");
    return out;
}

namespace {

struct FamilyInstance {
    std::string family;
    JElement e;
};

std::vector<FamilyInstance> table_instances(const Field& F) {
    const int q = F.q();
    const int m1 = F.neg(1);
    const int kap = F.kappa();
    const GL2 id{1, 0, 0, 1};
    const GL2 neg{m1, 0, 0, m1};

    // canonical halves
    std::vector<int> half;  // r in k^x with r <= -r in code order
    for (int r = 1; r < q; ++r)
        if (r < F.neg(r)) half.push_back(r);
    std::vector<int> split_half;  // x != 0, +-1, with x < 1/x in code order
    {
        std::vector<char> seen(q, 0);
        for (int x = 2; x < q; ++x) {
            if (x == m1 || seen[x]) continue;
            seen[x] = seen[F.inv(x)] = 1;
            split_half.push_back(x);
        }
    }

    std::vector<FamilyInstance> out;
    out.push_back({"identity", {id, {0, 0, 0, 0, 0}}});
    out.push_back({"z-gen", {id, {0, 0, 0, 0, 1}}});
    if (F.p() > 3) {
        for (int r3 = 1; r3 < q; ++r3) out.push_back({"center", {id, {0, 0, r3, 0, 0}}});
    } else {
        for (int r3 = 1; r3 < q; ++r3) {
            out.push_back({"center", {id, {0, 0, r3, 0, 0}}});
            out.push_back({"center-z", {id, {0, 0, r3, 0, 1}}});
        }
    }
    for (int b : {1, kap})
        for (int r3 = 0; r3 < q; ++r3) {
            out.push_back({"nb-center", {GL2{1, b, 0, 1}, {0, 0, r3, 0, 0}}});
            for (int r4 : half)
                out.push_back({"nb-r4", {GL2{1, b, 0, 1}, {0, 0, r3, r4, 0}}});
        }
    for (int r3 = 0; r3 < q; ++r3) out.push_back({"minus-center", {neg, {0, 0, r3, 0, 0}}});
    for (int b : {1, kap})
        for (int r3 = 0; r3 < q; ++r3)
            out.push_back({"minus-nb", {GL2{m1, F.mul(m1, b), 0, m1}, {0, 0, r3, 0, 0}}});
    for (int x : split_half)
        for (int r3 = 0; r3 < q; ++r3)
            out.push_back({"split", {GL2{x, 0, 0, F.inv(x)}, {0, 0, r3, 0, 0}}});
    return out;
}

}  // namespace

std::vector<FamilyExpect> expected_families(const Field& F) {
    const long long q = F.q();
    const long long q2m1 = q * q - 1;
    std::vector<FamilyExpect> out;
    out.push_back({"identity", 1, 1});
    out.push_back({"z-gen", q2m1, 1});
    if (F.p() > 3) {
        out.push_back({"center", q * q, q - 1});
    } else {
        out.push_back({"center", 1, q - 1});
        out.push_back({"center-z", q2m1, q - 1});
    }
    out.push_back({"nb-center", q2m1 * q * q / 2, 2 * q});
    out.push_back({"nb-r4", q2m1 * q * q, q * (q - 1)});
    out.push_back({"minus-center", pow_ll(q, 4), q});
    out.push_back({"minus-nb", q2m1 * pow_ll(q, 4) / 2, 2 * q});
    if (q > 3) out.push_back({"split", pow_ll(q, 5) * (q + 1), q * (q - 3) / 2});
    return out;
}

ClassTable classes(const Field& F, const G2& G) {
    const int q = F.q();
    const long long J = j_order(q);
    const long long Q5 = pow_ll(q, 5);
    auto scls = sl2_classes(F);

    auto enc = [q](int r1, int r2, int r3, int r4, int r5) -> long long {
        return r1 + (long long)q * (r2 + (long long)q * (r3 + (long long)q * (r4 + (long long)q * r5)));
    };
    auto digits = [q](long long idx, std::array<int, 5>& r) {
        for (int i = 0; i < 5; ++i) { r[i] = (int)(idx % q); idx /= q; }
    };

    std::vector<Mat7> vtab(Q5);
    {
        std::array<int, 5> r{};
        for (long long idx = 0; idx < Q5; ++idx) {
            digits(idx, r);
            vtab[idx] = G.v_elt(r[0], r[1], r[2], r[3], r[4]);
        }
    }

    ClassTable T;
    T.q = q;
    T.p = F.p();
    T.group_order = J;

    // orbit id -> record index, orbit labels of the fiber, per SL2 class
    std::vector<std::vector<int>> orbit_record(scls.size());
    std::vector<std::vector<int>> fiber_oid(scls.size());
    std::vector<Mat7> gminv_tab(scls.size());

    for (size_t ci = 0; ci < scls.size(); ++ci) {
        const auto& c = scls[ci];
        Mat7 gm = G.sl2_beta_embed(c.rep.a, c.rep.b, c.rep.c, c.rep.d);
        Mat7 gminv = G.inverse(gm);
        gminv_tab[ci] = gminv;

        // conjugation maps on the fiber c.rep * V: v -> A v B
        std::vector<std::pair<Mat7, Mat7>> maps;
        for (GL2 s : c.cent_gens) {
            Mat7 S = G.sl2_beta_embed(s.a, s.b, s.c, s.d);
            maps.push_back({G.mul(gminv, G.mul(S, gm)), G.inverse(S)});
        }
        for (int gamma : {(int)rA, (int)rAB, (int)rA2B, (int)rA3B, (int)rA3B2})
            for (int b : additive_basis(F))
                maps.push_back({G.mul(gminv, G.mul(G.root_elt(gamma, b), gm)),
                                G.root_elt(gamma, F.neg(b))});

        std::vector<int> oid(Q5, -1);
        std::vector<long long> stack;
        int norb = 0;
        for (long long start = 0; start < Q5; ++start) {
            if (oid[start] >= 0) continue;
            int id = norb++;
            long long size = 0;
            oid[start] = id;
            stack.assign(1, start);
            while (!stack.empty()) {
                long long idx = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& [A, B] : maps) {
                    Mat7 vp = G.mul(A, G.mul(vtab[idx], B));
                    auto co = G.unipotent_coords(vp);
                    if (!co || (*co)[1] != 0)
                        throw std::logic_error("classes: fiber left V");
                    long long nidx = enc((*co)[0], (*co)[2], (*co)[3], (*co)[4], (*co)[5]);
                    if (oid[nidx] < 0) { oid[nidx] = id; stack.push_back(nidx); }
                }
            }
            ClassRecord rec;
            std::array<int, 5> r{};
            digits(start, r);
            rec.rep = JElement{c.rep, r};
            rec.class_size = c.size * size;
            if (J % rec.class_size != 0)
                throw std::logic_error("classes: class size does not divide |J|");
            rec.centralizer_order = J / rec.class_size;
            rec.family = "other:" + c.label;
            orbit_record[ci].push_back((int)T.records.size());
            T.records.push_back(std::move(rec));
        }
        fiber_oid[ci] = std::move(oid);
    }

    long long mass = 0;
    for (const auto& rec : T.records) mass += rec.class_size;
    if (mass != J) throw std::logic_error("classes: class equation failed");

    // --- locate the table families inside the computed partition ------------
    // conjugator maps: for every u in the SL2 class of scls[ci].rep, an s with
    // s u s^{-1} = rep.
    std::vector<GL2> sl2_gens;
    for (int b : additive_basis(F)) {
        sl2_gens.push_back(GL2{1, b, 0, 1});
        sl2_gens.push_back(GL2{1, 0, b, 1});
    }
    std::vector<std::unordered_map<long long, GL2>> conjmap(scls.size());
    for (size_t ci = 0; ci < scls.size(); ++ci) {
        auto& M = conjmap[ci];
        std::vector<GL2> bfs{scls[ci].rep};
        M[encode_gl2(q, scls[ci].rep)] = GL2{1, 0, 0, 1};
        while (!bfs.empty()) {
            GL2 u = bfs.back();
            bfs.pop_back();
            GL2 s = M.at(encode_gl2(q, u));
            for (const GL2& t : sl2_gens) {
                GL2 up = gl2_mul(F, gl2_inv(F, t), gl2_mul(F, u, t));
                long long k = encode_gl2(q, up);
                if (!M.count(k)) { M[k] = gl2_mul(F, s, t); bfs.push_back(up); }
            }
        }
        if ((long long)M.size() != scls[ci].size)
            throw std::logic_error("classes: SL2 class enumeration mismatch");
    }

    std::unordered_map<std::string, long long> fam_count;
    for (const auto& inst : table_instances(F)) {
        long long mkey = encode_gl2(q, inst.e.m);
        int ci = -1;
        GL2 s;
        for (size_t i = 0; i < scls.size(); ++i) {
            auto it = conjmap[i].find(mkey);
            if (it != conjmap[i].end()) { ci = (int)i; s = it->second; break; }
        }
        if (ci < 0) throw std::logic_error("classes: SL2 part not located");
        Mat7 S = G.sl2_beta_embed(s.a, s.b, s.c, s.d);
        Mat7 jp = G.mul(S, G.mul(j_elt(G, inst.e), G.inverse(S)));
        Mat7 vp = G.mul(gminv_tab[ci], jp);
        auto co = G.unipotent_coords(vp);
        if (!co || (*co)[1] != 0) throw std::logic_error("classes: instance not in fiber");
        long long idx = enc((*co)[0], (*co)[2], (*co)[3], (*co)[4], (*co)[5]);
        int rec_i = orbit_record[ci][fiber_oid[ci][idx]];
        ClassRecord& rec = T.records[rec_i];
        if (rec.tabulated)
            throw std::logic_error("classes: two table rows in one class (" +
                                   rec.family + " / " + inst.family + ")");
        rec.tabulated = true;
        rec.family = inst.family;
        rec.rep = inst.e;
        rec.index_in_family = (int)(++fam_count[inst.family]);
    }
    for (auto& rec : T.records) {
        if (rec.tabulated) {
            rec.count_in_family = fam_count.at(rec.family);
        } else {
            ++fam_count[rec.family];
        }
    }
    for (auto& rec : T.records) {
        if (!rec.tabulated) {
            rec.count_in_family = fam_count.at(rec.family);
            rec.index_in_family = 0;  // assigned below in table order
        }
    }
    {
        std::unordered_map<std::string, int> running;
        for (auto& rec : T.records)
            if (!rec.tabulated) rec.index_in_family = ++running[rec.family];
    }
    return T;
}

Scalar class_character(const G2& G, const WeilRep& W, const InducedRep& I, const Mat7& j) {
    auto e = extract_j(G, j);
    if (!e) throw std::invalid_argument("class_character: element not in J");
    const int n = I.dim();
    auto A = I.action(e->m);
    Scalar ta = 0;
    for (int i = 0; i < n; ++i) ta += A[i * n + i];
    Op w = weil_on_j(G, W, j);
    const int q = G.q();
    Scalar tw = 0;
    for (int i = 0; i < q; ++i) tw += w[i * q + i];
    return ta * tw;
}

std::optional<Scalar> printed_char(const Field& F, const ClassRecord& rec, int chi_index) {
    const double qd = F.q();
    const Scalar psi3 = F.psi(rec.rep.r[2]);
    const std::string& f = rec.family;
    if (f == "identity" || f == "z-gen" || f == "center" || f == "center-z")
        return qd * (qd + 1) * psi3;
    if (f == "nb-center" || f == "nb-r4")
        return double(F.legendre(rec.rep.m.b)) * F.sqrt_eps0_q() * psi3;
    if (f == "minus-center")
        return (qd + 1) * F.mult_char(chi_index, F.neg(1)) * double(F.eps0()) * psi3;
    if (f == "minus-nb")
        return F.mult_char(chi_index, F.neg(1)) * double(F.eps0()) * psi3;
    if (f == "split") {
        int x = rec.rep.m.a;
        return double(F.legendre(x)) *
               (F.mult_char(chi_index, x) + F.mult_char(chi_index, F.inv(x))) * psi3;
    }
    return std::nullopt;
}

std::string verify_classes_exhaustive(const G2& G, const ClassTable& T) {
    const Field& F = G.field();
    const int q = F.q();
    // all elements of J
    std::vector<Mat7> allj;
    allj.reserve(T.group_order);
    auto sl2 = all_sl2(F);
    for (GL2 m : sl2) {
        Mat7 M = G.sl2_beta_embed(m.a, m.b, m.c, m.d);
        for (int r1 = 0; r1 < q; ++r1)
            for (int r2 = 0; r2 < q; ++r2)
                for (int r3 = 0; r3 < q; ++r3)
                    for (int r4 = 0; r4 < q; ++r4)
                        for (int r5 = 0; r5 < q; ++r5)
                            allj.push_back(G.mul(M, G.v_elt(r1, r2, r3, r4, r5)));
    }
    if ((long long)allj.size() != T.group_order) return "group enumeration size mismatch";

    std::unordered_map<Mat7, int, Mat7Hash> owner;
    owner.reserve(allj.size() * 2);
    for (size_t ri = 0; ri < T.records.size(); ++ri) {
        const auto& rec = T.records[ri];
        Mat7 t = j_elt(G, rec.rep);
        long long orbit = 0;
        for (const Mat7& s : allj) {
            Mat7 k = G.mul(s, G.mul(t, G.inverse(s)));
            auto [it, fresh] = owner.try_emplace(k, (int)ri);
            if (fresh) ++orbit;
            else if (it->second != (int)ri)
                return "records " + std::to_string(it->second) + " and " +
                       std::to_string(ri) + " are conjugate (family " + rec.family + ")";
        }
        if (orbit != rec.class_size)
            return "record " + std::to_string(ri) + " (family " + rec.family +
                   "): orbit size " + std::to_string(orbit) + " != " +
                   std::to_string(rec.class_size);
    }
    if ((long long)owner.size() != T.group_order) return "orbits do not cover J";
    return "";
}

std::string verify_centralizers(const G2& G, const ClassTable& T) {
    const Field& F = G.field();
    const int q = F.q();
    std::vector<Mat7> reps;
    reps.reserve(T.records.size());
    for (const auto& rec : T.records) reps.push_back(j_elt(G, rec.rep));
    std::vector<long long> counts(reps.size(), 0);

    auto commutes = [&](const Mat7& s, const Mat7& t) {
        // row-by-row with early exit
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) {
                int st = 0, ts = 0;
                for (int k = 0; k < 7; ++k) {
                    st = F.add(st, F.mul(s.at(r, k), t.at(k, c)));
                    ts = F.add(ts, F.mul(t.at(r, k), s.at(k, c)));
                }
                if (st != ts) return false;
            }
        return true;
    };

    auto sl2 = all_sl2(F);
    for (GL2 m : sl2) {
        Mat7 M = G.sl2_beta_embed(m.a, m.b, m.c, m.d);
        for (int r1 = 0; r1 < q; ++r1)
            for (int r2 = 0; r2 < q; ++r2)
                for (int r3 = 0; r3 < q; ++r3)
                    for (int r4 = 0; r4 < q; ++r4)
                        for (int r5 = 0; r5 < q; ++r5) {
                            Mat7 s = G.mul(M, G.v_elt(r1, r2, r3, r4, r5));
                            for (size_t ri = 0; ri < reps.size(); ++ri)
                                if (commutes(s, reps[ri])) ++counts[ri];
                        }
    }
    for (size_t ri = 0; ri < reps.size(); ++ri)
        if (counts[ri] != T.records[ri].centralizer_order)
            return "record " + std::to_string(ri) + " (family " + T.records[ri].family +
                   "): centralizer " + std::to_string(counts[ri]) + " != " +
                   std::to_string(T.records[ri].centralizer_order);
    return "";
}

std::string class_table_json(const ClassTable& T) {
    nlohmann::json out;
    out["q"] = T.q;
    out["p"] = T.p;
    out["group_order"] = T.group_order;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rec : T.records) {
        nlohmann::json row;
        row["m"] = {rec.rep.m.a, rec.rep.m.b, rec.rep.m.c, rec.rep.m.d};
        row["r"] = rec.rep.r;
        row["class_size"] = rec.class_size;
        row["centralizer_order"] = rec.centralizer_order;
        row["family"] = rec.family;
        row["index_in_family"] = rec.index_in_family;
        row["count_in_family"] = rec.count_in_family;
        row["tabulated"] = rec.tabulated;
        rows.push_back(std::move(row));
    }
    out["classes"] = std::move(rows);
    return out.dump(2);
}

}  // namespace g2fq
