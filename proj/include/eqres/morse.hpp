#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqres/space.hpp"

namespace eqres {

/// Canonical basis data: for each fixed point F the classes alpha^-(F)
/// and alpha^+(F), lower/upper triangular with respect to the moment
/// ordering with Euler-class diagonals.
struct CanonicalBasis {
    std::map<std::string, EquivClass> alpha_minus;
    std::map<std::string, EquivClass> alpha_plus;
};

struct BasisViolation {
    std::string kind;  // "diagonal-minus", "triangular-minus", ...
    std::string f;
    std::string g;  // empty for diagonal violations
    std::string detail;
};

struct BasisReport {
    bool ok = true;
    std::vector<BasisViolation> violations;
};

/// Check the full triangularity + diagonal contract of the basis.
BasisReport validate_basis(const Space& space, const CanonicalBasis& basis);

/// eta = eta_minus + eta_plus with eta_plus vanishing on F_- and eta_minus
/// vanishing on F_+: expand eta over alpha^- with polynomial coefficients
/// (triangular back-substitution), split by moment sign, then transfer the
/// rational corrections r_F at each positive point in increasing moment
/// order.
struct Decomposition {
    /// Polynomial coefficients of eta over alpha^-, all fixed points.
    std::map<std::string, Poly> expansion;
    /// Restriction data of the two halves (rational functions).
    std::map<std::string, FactoredRational> eta_minus;
    std::map<std::string, FactoredRational> eta_plus;
    /// r_F for F in F_+, normalized; num/den are the p_F, q_F pair.
    std::map<std::string, FactoredRational> coeffs;
    /// Positive-point labels in increasing moment order.
    std::vector<std::string> plus_order;
};

Decomposition decompose(const Space& space, const CanonicalBasis& basis, const EquivClass& eta);

struct KernelWitness {
    std::string point;            // first positive point with q_F not dividing p_F
    Poly polynomial;              // Lemma-2.5 style complement polynomial p
    FactoredRational residue;     // res_plus(p * p_F / q_F), nonzero
    EquivClass zeta;              // p * alpha^+(point): the rejecting test class
};

struct KernelVerdict {
    bool in_kernel = false;
    /// Present when in_kernel: restriction data of the two summands,
    /// polynomial at every point, xi_plus|F_- = 0 and xi_minus|F_+ = 0.
    std::map<std::string, Poly> xi_plus;
    std::map<std::string, Poly> xi_minus;
    std::optional<KernelWitness> witness;
    Decomposition decomposition;
};

/// Constructive kernel membership test for the equivariant Kirwan map:
/// decompose, then check q_F | p_F at every positive point in moment
/// order.  All divisions succeed -> in_kernel with the explicit summands;
/// first failure -> witness with a nonzero pairing residue.
KernelVerdict kernel_test(const Space& space, const CanonicalBasis& basis, const EquivClass& eta);

struct CriterionResult {
    bool passes = true;
    std::optional<std::string> witness_zeta;
    std::optional<FactoredRational> witness_value;
};

/// Evaluate the residue criterion sum_{F in F_+} res_plus((eta zeta)|_F/e_F)
/// for each supplied zeta; a nonzero value proves eta is not in the kernel.
/// Complete as an acceptor only when the zeta family spans far enough.
CriterionResult residue_criterion(const Space& space, const EquivClass& eta,
                                  const std::vector<EquivClass>& zetas);

/// Lemma-2.5 witness for a reduced (coprime) fraction with nonempty
/// denominator: a polynomial p, built from the complement of a denominator
/// factor times a small monomial, with res_plus(p * f) != 0.
struct Lemma25Witness {
    Poly polynomial;
    FactoredRational residue;
};
Lemma25Witness lemma25_witness(const FactoredRational& reduced);

}  // namespace eqres
