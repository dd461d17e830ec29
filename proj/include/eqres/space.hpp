#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqres/factored.hpp"
#include "eqres/poly.hpp"

namespace eqres {

/// Isolated fixed point: moment value and tangent weights of the torus
/// action written in circle coordinates (X, Y1..Ym).  Every weight must
/// have nonzero X-coefficient (isolatedness for the circle).
struct FixedPoint {
    std::string label;
    Rational moment;
    std::vector<LinForm> weights;
};

struct SpaceOptions {
    Rational moment_shift = 0;
    /// Permit all fixed points on one side of 0 (degenerate test inputs).
    bool allow_one_sided = false;
};

/// Full fixed-point dataset of a Hamiltonian circle action with isolated
/// fixed points.  Validates on construction: nonzero moments, nonzero
/// X-coefficients, constant weight count dim_half, unique labels.
class Space {
public:
    Space(std::size_t num_y, std::size_t dim_half, std::vector<FixedPoint> points,
          SpaceOptions options = {});

    std::size_t num_y() const { return num_y_; }
    std::size_t dim_half() const { return dim_half_; }
    const std::vector<FixedPoint>& points() const { return points_; }

    const FixedPoint& point(const std::string& label) const;
    bool has_point(const std::string& label) const;

private:
    std::size_t num_y_;
    std::size_t dim_half_;
    std::vector<FixedPoint> points_;
};

/// Partition into (F_minus, F_plus) by the sign of the moment, each side
/// ordered by increasing moment.  Throws NonRegularValue on a zero moment
/// (also enforced at Space construction).
std::pair<std::vector<FixedPoint>, std::vector<FixedPoint>> split_fixed_points(const Space& space);

/// Equivariant class as its fixed-point restrictions.  Each restriction is
/// homogeneous of polynomial degree `degree` or zero.
struct EquivClass {
    std::string name;
    int degree = 0;
    std::map<std::string, Poly> restrictions;

    const Poly& at(const std::string& label) const;
};

EquivClass unit_class(const Space& space, const std::string& name = "1");
EquivClass class_product(const EquivClass& a, const EquivClass& b);
EquivClass class_add(const EquivClass& a, const EquivClass& b);
EquivClass class_scaled(const EquivClass& a, const Rational& s);
EquivClass class_times_poly(const EquivClass& a, const Poly& p, const std::string& name = "");

/// Totality over the space plus per-point homogeneity; throws
/// ValidationError on the first violation.
void check_class(const Space& space, const EquivClass& cls);

/// Tangent weights of F as a denominator factor multiset.
std::vector<FactorPower> weight_factors(const FixedPoint& f);
/// Equivariant Euler class as the reciprocal 1/prod(weights).
FactoredRational euler_reciprocal(const FixedPoint& f, std::size_t num_y);
/// The product of all tangent weights, as a polynomial.
Poly euler_poly(const FixedPoint& f, std::size_t num_y);
/// Product of the weights with negative / positive X-coefficient
/// (Euler class of the downward / upward normal bundle of the moment
/// Morse function).
Poly neg_euler_poly(const FixedPoint& f, std::size_t num_y);
Poly pos_euler_poly(const FixedPoint& f, std::size_t num_y);
std::vector<FactorPower> neg_weight_factors(const FixedPoint& f);

struct LocalizationSum {
    FactoredRational value;
    bool is_polynomial;
};

/// ABBV localization sum over all fixed points: sum_F eta|_F / e_F,
/// normalized.  Polynomial for genuine classes.
LocalizationSum abbv_sum(const Space& space, const EquivClass& eta);

/// Reduction pairing kappa(eta) kappa(zeta) [N_red] with the constant of
/// the residue formula normalized to 1: sum over positive fixed points of
/// res_plus((eta zeta)|_F / e_F).
LocalizationSum pairing(const Space& space, const EquivClass& eta, const EquivClass& zeta);

struct ClassReport {
    bool ok = true;
    std::vector<std::string> problems;
    /// Name of the first witness whose ABBV sum failed to be polynomial.
    std::optional<std::string> failing_witness;
};

/// Necessary-condition check on a restriction tuple: homogeneity plus
/// polynomiality of abbv_sum(eta * w) for w = 1 and every supplied witness.
ClassReport validate_class(const Space& space, const EquivClass& eta,
                           const std::vector<EquivClass>& witnesses);

}  // namespace eqres
