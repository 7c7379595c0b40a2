#include "doctest.h"

#include "g2fq/jclasses.hpp"

#include <map>

using namespace g2fq;

namespace {
long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}
}  // namespace

TEST_SUITE("jclasses") {

TEST_CASE("SL2 conjugacy classes: partition, centralizer generators") {
    for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Field F(p, f);
        const int q = F.q();
        auto cls = sl2_classes(F);
        CHECK((int)cls.size() == q + 4);
        long long mass = 0;
        for (const auto& c : cls) {
            mass += c.size;
            CHECK(c.size * c.cent_order == (long long)q * (q * (long long)q - 1));
            // centralizer generators do centralize the representative
            for (GL2 s : c.cent_gens) {
                CHECK(gl2_det(F, s) == 1);
                CHECK(gl2_mul(F, s, c.rep) == gl2_mul(F, c.rep, s));
            }
        }
        CHECK(mass == (long long)q * (q * (long long)q - 1));
    }
}

TEST_CASE("class equation of J is exact for q = 3, 5, 7, 9") {
    for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Field F(p, f);
        G2 G(F);
        const long long q = F.q();
        const long long J = pow_ll(q, 6) * (q * q - 1);
        ClassTable T = classes(F, G);
        CHECK(T.group_order == J);
        long long mass = 0;
        for (const auto& rec : T.records) {
            mass += rec.class_size;
            CHECK(rec.class_size * rec.centralizer_order == J);
        }
        CHECK(mass == J);

        // every printed family appears with the printed class size and count
        std::map<std::string, long long> count, size;
        for (const auto& rec : T.records)
            if (rec.tabulated) {
                ++count[rec.family];
                if (size.count(rec.family)) {
                    CHECK(size[rec.family] == rec.class_size);
                } else {
                    size[rec.family] = rec.class_size;
                }
            }
        auto expect = expected_families(F);
        CHECK(count.size() == expect.size());
        for (const auto& e : expect) {
            REQUIRE(count.count(e.family));
            CHECK(count[e.family] == e.count);
            CHECK(size[e.family] == e.class_size);
        }
        // count_in_family is consistent
        for (const auto& rec : T.records)
            if (rec.tabulated) CHECK(rec.count_in_family == count[rec.family]);
    }
}

TEST_CASE("q = 3: exhaustive orbit verification and central classes") {
    Field F(3, 1);
    G2 G(F);
    ClassTable T = classes(F, G);
    std::string err = verify_classes_exhaustive(G, T);
    INFO(err);
    CHECK(err.empty());
    // at p = 3 the classes (0,0,r3,0,0) are central: size 1
    int central = 0;
    for (const auto& rec : T.records)
        if (rec.family == "center") {
            CHECK(rec.class_size == 1);
            ++central;
        }
    CHECK(central == 2);  // r3 in {1, 2}
}

TEST_CASE("q = 5: centralizer orders by direct enumeration") {
    Field F(5, 1);
    G2 G(F);
    ClassTable T = classes(F, G);
    std::string err = verify_centralizers(G, T);
    INFO(err);
    CHECK(err.empty());
    // split rows: centralizer (q-1) q, class size q^5 (q+1)
    for (const auto& rec : T.records)
        if (rec.family == "split") {
            CHECK(rec.centralizer_order == 4 * 5);
            CHECK(rec.class_size == pow_ll(5, 5) * 6);
        }
}

TEST_CASE("character column: direct trace matches the printed formulas (q = 3, 5)") {
    for (int p : {3, 5}) {
        Field F(p, 1);
        G2 G(F);
        WeilRep W(F, false);
        ClassTable T = classes(F, G);
        for (int chi = 0; chi < F.q() - 1; ++chi) {
            InducedRep I(F, chi);
            for (const auto& rec : T.records) {
                Scalar tr = class_character(G, W, I, j_elt(G, rec.rep));
                auto want = printed_char(F, rec, chi);
                INFO("family ", rec.family, " index ", rec.index_in_family, " chi ", chi);
                if (want) {
                    CHECK(std::abs(tr - *want) < 1e-8);
                } else {
                    // remainder classes (elliptic part or not reducible to
                    // SL2 times the center) have vanishing character
                    CHECK(std::abs(tr) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("character column is a class function (sampled conjugates, q = 3)") {
    Field F(3, 1);
    G2 G(F);
    WeilRep W(F, false);
    InducedRep I(F, 1);
    ClassTable T = classes(F, G);
    auto sl2 = all_sl2(F);
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> gi(0, sl2.size() - 1);
    std::uniform_int_distribution<int> xi(0, 2);
    for (const auto& rec : T.records) {
        Mat7 t = j_elt(G, rec.rep);
        Scalar base = class_character(G, W, I, t);
        for (int k = 0; k < 5; ++k) {
            GL2 m = sl2[gi(rng)];
            JElement e{m, {xi(rng), xi(rng), xi(rng), xi(rng), xi(rng)}};
            Mat7 s = j_elt(G, e);
            Mat7 c = G.mul(s, G.mul(t, G.inverse(s)));
            CHECK(std::abs(class_character(G, W, I, c) - base) < 1e-9);
        }
    }
}

TEST_CASE("JSON serialization round-trips basic fields") {
    Field F(3, 1);
    G2 G(F);
    ClassTable T = classes(F, G);
    std::string s = class_table_json(T);
    CHECK(s.find("\"group_order\": 5832") != std::string::npos);
    CHECK(s.find("\"family\"") != std::string::npos);
}

}  // TEST_SUITE
