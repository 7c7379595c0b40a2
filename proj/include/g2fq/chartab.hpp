// Restricted character tables on the Fourier-Jacobi subgroup J and the
// inner-product engine: the cuspidal-relevant class functions of G2(F_q)
// (X2, X3, X6, Y1..Y4 away from characteristic 3; chi12, chi13, chi14,
// theta5, theta10, theta11, theta12 in characteristic 3), evaluated on the
// class records of jclasses, and the pairing
//   <Pi, I(chi) (x) omega_psi> = (1/|J|) sum_t |J(t)| conj(Ch_Pi(t)) w(t).

#pragma once

#include "g2fq/jclasses.hpp"

#include <string>
#include <vector>

namespace g2fq {

// The class functions available at this q.
std::vector<std::string> class_fn_names(const Field& F);

// Value of the named class function at a class record.  `unit` is the free
// fourth-root-of-unity parameter (eps(pi2) for X2, eps(k,l) for chi12);
// it multiplies only the h(-1,-1)-family values of those two functions.
// Throws on starred cells (families where the printed table leaves the value
// blank; these only occur where the pairing weight vanishes).
Scalar class_fn_value(const Field& F, const QuadField& K, const std::string& name,
                      const ClassRecord& rec, Scalar unit = Scalar(1));

// Pairing weights Ch_{I(chi) (x) omega_psi}(t) per record:
//  * direct path: matrix traces through smallrep,
//  * printed path: the closed formulas of the tables (zero off-table).
std::vector<Scalar> char_column_direct(const G2& G, const ClassTable& T,
                                       const WeilRep& W, int chi_index);
std::vector<Scalar> char_column_printed(const Field& F, const ClassTable& T, int chi_index);

// (1/|J|) sum_i |J(t_i)| conj(Ch_name(t_i)) weights[i]; records whose weight
// vanishes (within 1e-9) are skipped, so starred cells are never read.
Scalar pairing(const Field& F, const QuadField& K, const ClassTable& T,
               const std::string& name, const std::vector<Scalar>& weights,
               Scalar unit = Scalar(1));

// Pairings of the virtual-character combinations that must vanish (X17 and,
// for q = -1 mod 3, X33 away from characteristic 3; theta10, theta11,
// theta12 in characteristic 3) plus the theta5 multiplicity with its
// predicted value (2 when chi is the quadratic character, else 1).
struct ComboResult {
    std::string name;
    Scalar value{};
    Scalar expected{};
};
std::vector<ComboResult> combination_checks(const Field& F, const QuadField& K,
                                            const ClassTable& T,
                                            const std::vector<Scalar>& weights,
                                            int chi_index);

}  // namespace g2fq
