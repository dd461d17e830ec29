#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "eqres/linform.hpp"
#include "eqres/rational.hpp"

namespace eqres {

/// Exponent vector of length num_y + 1; index 0 is the X exponent,
/// index i >= 1 the exponent of Y_i.
using Monomial = std::vector<unsigned>;

/// Sparse exact polynomial in X, Y1..Ym over the rationals.  Canonical:
/// no zero coefficients are stored, so equality is map equality.
class Poly {
public:
    explicit Poly(std::size_t num_y) : num_y_(num_y) {}

    static Poly zero(std::size_t num_y) { return Poly(num_y); }
    static Poly constant(std::size_t num_y, const Rational& c);
    static Poly variable_x(std::size_t num_y);
    static Poly variable_y(std::size_t num_y, std::size_t i);  // 1-based i
    static Poly monomial(std::size_t num_y, Monomial exps, const Rational& c);
    static Poly from_linform(const LinForm& l);

    std::size_t num_y() const { return num_y_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_constant() const;
    Rational coeff(const Monomial& m) const;

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_x() const;
    /// Degree d such that every term has total degree d; nullopt for
    /// inhomogeneous polynomials and for the zero polynomial.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous_of_degree_or_zero(int d) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& s) const;
    Poly pow(unsigned e) const;

    Poly derivative_x() const;

    /// Replace X by the pure-Y linear form c (c.x_coeff() must be 0).
    Poly substitute_x(const LinForm& c) const;

    /// Decompose as sum_e X^e * slice_e(Y); slices carry X-exponent 0.
    std::map<unsigned, Poly> x_slices() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.num_y_ == b.num_y_ && a.terms_ == b.terms_;
    }

private:
    void insert(const Monomial& m, const Rational& c);
    static void check_same_vars(const Poly& a, const Poly& b);

    std::size_t num_y_;
    std::map<Monomial, Rational> terms_;
};

struct FactorPower {
    LinForm form;
    unsigned mult = 1;
};

/// Quotient p / l if l divides p exactly, nullopt otherwise.
/// l must be nonzero.
std::optional<Poly> exact_divide_linear(const Poly& p, const LinForm& l);

/// Quotient of p by the whole factor multiset, or nullopt at the first
/// failing factor.  Linear forms are irreducible, so the verdict does not
/// depend on the division order.
std::optional<Poly> divides_product(const Poly& p, const std::vector<FactorPower>& factors);

}  // namespace eqres
