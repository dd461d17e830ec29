#pragma once

#include <cstddef>
#include <vector>

#include "eqres/poly.hpp"

namespace eqres {

/// Rational function numerator / prod_k factor_k^mult_k with linear-form
/// factors.  Representation invariant: factors are stored in canonical
/// primitive-integer form (scalars absorbed into the numerator), sorted,
/// with multiplicities merged.  normalized() additionally cancels every
/// linear factor dividing the numerator, which makes the representation
/// canonical: two FactoredRationals are equal as values iff their
/// normalized forms compare equal.
class FactoredRational {
public:
    explicit FactoredRational(Poly num) : num_(std::move(num)) {}
    FactoredRational(Poly num, const std::vector<FactorPower>& factors);

    static FactoredRational zero(std::size_t num_y) { return FactoredRational(Poly::zero(num_y)); }
    static FactoredRational one(std::size_t num_y) {
        return FactoredRational(Poly::constant(num_y, 1));
    }

    const Poly& num() const { return num_; }
    const std::vector<FactorPower>& den() const { return den_; }
    std::size_t num_y() const { return num_.num_y(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    /// Expanded denominator product.
    Poly den_poly() const;

    FactoredRational operator-() const;
    FactoredRational operator+(const FactoredRational& o) const;
    FactoredRational operator-(const FactoredRational& o) const;
    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational scaled(const Rational& s) const;
    FactoredRational times_poly(const Poly& p) const;
    /// Multiply the denominator by the given factors.
    FactoredRational divided_by_factors(const std::vector<FactorPower>& factors) const;

    /// Cancel every linear denominator factor dividing the numerator.
    FactoredRational normalized() const;

    FactoredRational derivative_x() const;

    /// Replace X by the pure-Y linear form c in numerator and factors.
    /// Throws if a denominator factor vanishes identically under c.
    FactoredRational substitute_x(const LinForm& c) const;

    /// Exact value comparison by cross-multiplication.
    bool value_equals(const FactoredRational& o) const;

    friend bool operator==(const FactoredRational& a, const FactoredRational& b);

private:
    Poly num_;
    std::vector<FactorPower> den_;
};

}  // namespace eqres
