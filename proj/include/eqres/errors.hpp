#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in the polynomial / fraction grammar. `position` is a
/// 0-based byte offset into the input text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Invalid input data: schema violations, broken invariants, bad files.
struct ValidationError : Error {
    using Error::Error;
};

/// Some fixed point has moment value 0, so 0 is not a regular value.
struct NonRegularValue : ValidationError {
    using ValidationError::ValidationError;
};

/// A denominator factor has zero X-coefficient, so its pole lies on the
/// circle axis and the residue operators do not apply.
struct PoleOnCircleAxis : Error {
    using Error::Error;
};

/// Two fixed points share a moment value; the decomposition needs the
/// strict ordering of Lemma-style back-substitution.  Re-run the circle
/// search to pick a circle separating the moments.
struct TiedMomentValues : ValidationError {
    std::vector<std::string> labels;
    TiedMomentValues(std::string a, std::string b)
        : ValidationError("tied moment values at fixed points '" + a + "' and '" + b +
                          "'; choose a different circle (see the generic circle search)"),
          labels{std::move(a), std::move(b)} {}
};

/// The class is not a polynomial combination of the supplied basis.
struct NotInPolynomialSpan : ValidationError {
    using ValidationError::ValidationError;
};

/// Circle search ran out of candidates within the requested bound.
struct SearchExhausted : Error {
    using Error::Error;
};

}  // namespace eqres
