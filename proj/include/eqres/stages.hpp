#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqres/space.hpp"

namespace eqres {

/// Fixed point of one reduction stage: Euler class c * X_j^d and
/// restrictions of the stage classes, univariate in the stage variable.
struct StagePoint {
    std::string label;
    Rational moment;
    unsigned euler_exponent = 1;
    Rational euler_coeff = 1;
    std::map<std::string, Poly> restrictions;  // univariate (num_y == 0)
};

struct StageSpace {
    unsigned index = 1;  // j
    std::vector<StagePoint> points;
    /// Class names of the previous stage -> names at this stage.
    std::map<std::string, std::string> transfer;

    std::vector<std::string> class_names() const;
    const StagePoint& point(const std::string& label) const;
};

/// Ordered chain of stages j = 1..m.
struct StageChain {
    std::vector<StageSpace> stages;
};

/// Structural validation: nonzero Euler coefficients and moments, total
/// univariate restrictions, transfer targets present.
void validate_chain(const StageChain& chain);

/// Restriction of the coefficient ring along the stage circle: keep the
/// X-part, set every other variable to zero.  Result is univariate.
Poly pi_project(const Poly& p);

struct StageWitness {
    std::string zeta;
    unsigned power = 0;
    Rational value = 0;
};

struct StageTestResult {
    bool in_kernel = false;
    std::optional<StageWitness> witness;
};

/// One-variable residue kernel test at a stage: for zeta over all stage
/// classes times X^t (t up to the maximal Euler exponent, plus
/// extra_powers), extract the coefficient of X^{-1} of
/// sum_{F : moment > 0} (eta zeta)|_F / (c_F X^{d_F}).  All zero -> in
/// kernel; otherwise the first failing (zeta, t) with its value.
StageTestResult ker_res_test(const StageSpace& stage, const std::string& eta,
                             unsigned extra_powers = 0);

struct StagesVerdict {
    /// 1-based stage at which the class was detected to die, if any.
    std::optional<unsigned> detected_stage;
    /// For every stage walked without detection, the failing witness.
    std::vector<std::pair<unsigned, StageWitness>> stage_witnesses;
    /// Name of the class at the stage where the walk stopped.
    std::string final_name;
};

/// Walk the chain: project, test, follow the transfer map.  Returns the
/// first stage that passes, or not-detected with one witness per stage.
/// Throws ValidationError if the transfer chain breaks before detection.
StagesVerdict kernel_via_stages(const StageChain& chain, const std::string& name);

struct ConsistencyReport {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Cross-stage data check for classes present at adjacent stages j, j+1:
/// the stage-j residue pairing of each such pair must match the constant
/// term of the stage-(j+1) full fixed-point sum up to one common nonzero
/// ratio per stage boundary (the reduction constant); zero pairings must
/// match exactly, and the stage-(j+1) full sums must be polynomial.
/// Vacuous for single-stage chains.
ConsistencyReport stage_consistency_check(const StageChain& chain);

/// Definition-3.1 style residue number at one stage: coefficient of
/// X^{-1} of sum_{F : moment > 0} (a b)|_F / (c_F X^{d_F}).
Rational stage_pairing(const StageSpace& stage, const std::string& a, const std::string& b);

/// Build stage data from circle-space data by projecting all Y variables
/// out of the restrictions and Euler classes.
StageSpace stage_from_space(const Space& space, const std::vector<EquivClass>& classes,
                            unsigned index = 1);

}  // namespace eqres
