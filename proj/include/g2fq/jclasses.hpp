// Conjugacy-class data of the Fourier-Jacobi subgroup J = SL2 x V of G2:
// representatives, centralizer orders, class sizes, and the character of
// I(chi) (x) omega_psi on each class.
//
// The full partition of J into classes is computed independently: a class of
// J = SL2 x V projects onto a single SL2-class, and the classes over a fixed
// SL2-class representative g biject with the orbits of C_{SL2}(g) x V acting
// by conjugation on the fiber g V.  Each orbit is found by breadth-first
// search on the q^5-element fiber.  The printed table families (the named
// representatives) are then located inside this partition, which checks both
// their class sizes and their pairwise non-conjugacy; the leftover classes
// (elliptic semisimple part, or not conjugate into SL2 times the center)
// carry character zero.

#pragma once

#include "g2fq/smallrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2fq {

// An SL2(F_q) conjugacy class with generators of the centralizer of rep.
struct Sl2Class {
    GL2 rep;
    long long size = 0;
    std::string label;           // "1", "-1", "n(b)", "-n(b)", "split", "elliptic"
    std::vector<GL2> cent_gens;  // generate C_{SL2}(rep)
    long long cent_order = 0;
};

// The q+4 classes of SL2(F_q): +-1, +-n(1), +-n(kappa), split diag(x, 1/x)
// with x identified with 1/x, and elliptic (x, y; kappa y, x) with y != 0
// identified with (x, -y).
std::vector<Sl2Class> sl2_classes(const Field& F);

struct ClassRecord {
    JElement rep;                     // representative of the class
    long long class_size = 0;         // |J(t)|
    long long centralizer_order = 0;  // |C_J(t)| = |J| / |J(t)|
    std::string family;               // table row label, or "other:<sl2 label>"
    int index_in_family = 0;          // 1-based position within the family
    long long count_in_family = 0;    // "No." column: classes in this family
    bool tabulated = false;           // has a printed nonzero character formula
};

struct ClassTable {
    int q = 0;
    int p = 0;
    long long group_order = 0;  // |J| = q^6 (q^2 - 1)
    std::vector<ClassRecord> records;
};

// Complete set of J-conjugacy classes; families follow the p > 3 table when
// p > 3 and the p = 3 table otherwise.  Throws if internal checks (exact
// class equation, divisibility of |J| by each class size) fail.
ClassTable classes(const Field& F, const G2& G);

// Expected (class size, family count) per tabulated family label, for tests.
struct FamilyExpect {
    std::string family;
    long long class_size = 0;
    long long count = 0;
};
std::vector<FamilyExpect> expected_families(const Field& F);

// Direct trace of I(chi) (x) omega_psi at j in J:
// trace(I.action(m)) * trace(weil_on_j(j)) with m the SL2 part of j.
Scalar class_character(const G2& G, const WeilRep& W, const InducedRep& I, const Mat7& j);

// The printed character-column value for a tabulated record (empty for the
// character-zero remainder rows).  chi_index selects the multiplicative
// character chi of k^x as in Field::mult_char.
std::optional<Scalar> printed_char(const Field& F, const ClassRecord& rec, int chi_index);

// Exhaustive verification by orbit enumeration (intended for q = 3):
// conjugates every representative by all |J| elements, checks the orbit size
// against class_size, and checks that the orbits partition J.  Returns an
// empty string on success, else a message naming the first failing row.
std::string verify_classes_exhaustive(const G2& G, const ClassTable& T);

// Centralizer verification (intended for q = 5): for every record, counts
// the elements of J commuting with the representative and compares with
// centralizer_order.  Returns an empty string on success.
std::string verify_centralizers(const G2& G, const ClassTable& T);

// JSON serialization of the table for the report CLI.
std::string class_table_json(const ClassTable& T);

}  // namespace g2fq
