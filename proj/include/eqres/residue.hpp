#pragma once

#include "eqres/factored.hpp"

namespace eqres {

/// Sum of the residues of h dX over all poles in X.  Poles sit at the
/// affine-linear locations X = -beta(Y)/m, one per distinct canonical
/// denominator factor; a pole of order a is evaluated with the derivative
/// formula res = (1/(a-1)!) d^{a-1}/dX^{a-1} [h (X-c)^a] at X = c.
/// Requires every denominator factor to have nonzero X-coefficient
/// (throws PoleOnCircleAxis otherwise).  The result involves only Y.
FactoredRational res_plus(const FactoredRational& h);

/// The series-expansion residue: expand every 1/(mX + beta(Y)) in powers
/// of beta(Y)/(mX), multiply by the numerator and collect the total
/// coefficient of X^{-1}.  Always a polynomial in Y; equals res_plus.
/// extra_depth pads the series truncation beyond the sufficient bound
/// (used by the truncation-sufficiency tests).
FactoredRational res_gk(const FactoredRational& h, unsigned extra_depth = 0);

}  // namespace eqres
