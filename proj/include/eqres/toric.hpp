#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqres/morse.hpp"
#include "eqres/space.hpp"

namespace eqres {

using IntVec = std::vector<long long>;

/// Fixed point of a rank-r torus action: moment vector and integer
/// tangent weights in character coordinates.
struct TorusPoint {
    std::string label;
    /// Per projective factor, the index of the coordinate point.
    std::vector<std::size_t> factor_indices;
    std::vector<Rational> moment;
    std::vector<IntVec> weights;
};

/// One projective-space factor: the characters of its coordinate points,
/// embedded in the full character lattice.
struct ProjFactor {
    std::vector<IntVec> characters;
};

/// Torus fixed-point data for products of projective spaces; the factor
/// structure drives the canonical basis construction after a circle is
/// chosen.
struct TorusSpace {
    std::size_t rank = 0;
    std::vector<ProjFactor> factors;
    std::vector<TorusPoint> points;
};

/// Generic circle: primitive xi with nonzero weight pairings and pairwise
/// distinct moment pairings, plus a unimodular completion whose first row
/// is xi (rows 2..r give the Y coordinates), plus the default moment shift
/// placing 0 in the gap nearest the median of the critical values.
struct CircleChoice {
    IntVec xi;
    std::vector<IntVec> completion;
    Rational suggested_shift;
};

/// CP^n with the standard torus of rank n: points p0..pn with characters
/// Lambda_0 = 0, Lambda_i = e_i; tangent weights Lambda_j - Lambda_i.
TorusSpace cpn_space(std::size_t n);

/// Product action: pairs of points, concatenated moments, embedded weights.
TorusSpace product_space(const TorusSpace& a, const TorusSpace& b);

/// Deterministic search over primitive integer vectors (increasing
/// sup-norm, lexicographic within, first nonzero entry positive) for a
/// generic circle.  Throws SearchExhausted past the bound.
CircleChoice generic_circle(const TorusSpace& space, unsigned search_bound);

/// Rewrite through the completion into circle coordinates: weight w
/// becomes the linear form <xi,w> X + sum_j <c_j,w> Y_j, the moment of F
/// becomes <mu(F), xi> + shift.
Space to_circle_space(const TorusSpace& space, const CircleChoice& choice, const Rational& shift);

struct BuiltSpace {
    Space space;
    CanonicalBasis basis;
    /// Basis classes plus the unit, keyed by name, for the space's table.
    std::map<std::string, EquivClass> classes;
};

/// Circle space together with its canonical basis, built from the factor
/// structure and accepted only after validate_basis passes.
BuiltSpace build_circle_space(const TorusSpace& space, const CircleChoice& choice,
                              const Rational& shift);

}  // namespace eqres
