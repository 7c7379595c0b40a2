// Character sums over the region r3 in k^x, r4 in k^x/{+-1}, stratified by
// the class of the solution t of t + 1/t = z(r, r3, r4) = -2 - r*r4^2/r3^3
// in the quadratic extension k2.  Three stratifications apply, depending on
// the residue of q mod 3, and the closed forms give the differences between
// the r = 1 and r = kappa sums.

#pragma once

#include "g2fq/ff.hpp"

#include <string>
#include <vector>

namespace g2fq {

enum class SumCase { B, C, D };  // q = 1 mod 3, q = -1 mod 3, p = 3

SumCase sum_case(const Field& F);
int num_t_classes(SumCase c);  // 4 for B and C, 3 for D

// Class of t(r, r3, r4), for r3, r4 != 0:
//   B: 0 = {+-1}, 1 = cube in k^x minus {+-1}, 2 = non-cube in k^x,
//      3 = outside k^x
//   C: 0 = {+-1}, 1 = k^x minus {+-1}, 2 = norm-one cube (not +-1),
//      3 = norm-one non-cube
//   D: 0 = {+-1}, 1 = k^x minus {+-1}, 2 = outside k^x
int classify_t(const Field& F, const QuadField& K, int r, int r3, int r4);

// Basic sum A_r(a) = sum over nonzero squares x of psi(a r x);  a, r != 0.
Scalar sum_A(const Field& F, int r, int a);

// The stratified sums for fixed r: entry i is the sum of psi(r3) over the
// pairs (r3, r4) whose t falls in class i (r4 runs over the canonical half
// of k^x/{+-1}, the representative with the smaller code).
std::vector<Scalar> family_sums(const Field& F, const QuadField& K, int r);

// Closed-form values of the differences (sums at r=1) - (sums at r=kappa),
// indexed like family_sums.  sqrt(eps0 q) is the measured branch.
std::vector<Scalar> family_closed_diffs(const Field& F);

struct SumResult {
    std::string family;   // "A", "B", "C", or "D"
    int index = 0;        // class index i (or 0 for A)
    Scalar diff{};        // measured difference (r = 1) - (r = kappa)
    Scalar closed{};      // printed closed form
};

// All closed-form comparisons applicable at this q (the A difference at
// a = 1 plus every stratified difference).
std::vector<SumResult> sum_family(const Field& F, const QuadField& K);

}  // namespace g2fq
