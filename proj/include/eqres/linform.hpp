#pragma once

#include <cstddef>
#include <vector>

#include "eqres/rational.hpp"

namespace eqres {

class LinForm;

/// Canonical primitive-integer scaling of a linear form: the unique
/// scalar multiple with coprime integer coefficients whose first nonzero
/// coefficient (X, then Y1, Y2, ...) is positive.
struct CanonicalLinForm;

/// Linear form  m*X + sum_i beta_i * Y_i  (no constant term).  Carries
/// tangent weights and the denominator factors of the residue calculus.
class LinForm {
public:
    LinForm(Rational x_coeff, std::vector<Rational> y_coeffs)
        : x_(std::move(x_coeff)), y_(std::move(y_coeffs)) {}

    static LinForm zero(std::size_t num_y) { return LinForm(0, std::vector<Rational>(num_y, 0)); }

    const Rational& x_coeff() const { return x_; }
    const std::vector<Rational>& y_coeffs() const { return y_; }
    std::size_t num_y() const { return y_.size(); }

    bool is_zero() const {
        if (x_ != 0) return false;
        for (const auto& c : y_)
            if (c != 0) return false;
        return true;
    }

    LinForm negated() const {
        LinForm r = *this;
        r.x_ = -r.x_;
        for (auto& c : r.y_) c = -c;
        return r;
    }

    LinForm operator+(const LinForm& o) const {
        LinForm r = *this;
        r.x_ += o.x_;
        for (std::size_t i = 0; i < r.y_.size(); ++i) r.y_[i] += o.y_[i];
        return r;
    }

    LinForm scaled(const Rational& s) const {
        LinForm r = *this;
        r.x_ *= s;
        for (auto& c : r.y_) c *= s;
        return r;
    }

    /// *this == scale * form with form canonical.
    CanonicalLinForm canonicalized() const;

    /// Total order (coefficient-wise, X first); canonical forms sort with it.
    static int compare(const LinForm& a, const LinForm& b);

    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    Rational x_;
    std::vector<Rational> y_;
};

struct CanonicalLinForm {
    LinForm form;
    Rational scale;
};

}  // namespace eqres
