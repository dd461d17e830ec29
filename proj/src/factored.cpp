#include "eqres/factored.hpp"

#include <algorithm>

#include "eqres/errors.hpp"

namespace eqres {

namespace {

// sorted insert of a canonical factor, merging multiplicities
void add_factor(std::vector<FactorPower>& den, const LinForm& canon, unsigned mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(den.begin(), den.end(), canon,
                               [](const FactorPower& fp, const LinForm& l) {
                                   return LinForm::compare(fp.form, l) < 0;
                               });
    if (it != den.end() && it->form == canon) {
        it->mult += mult;
    } else {
        den.insert(it, FactorPower{canon, mult});
    }
}

}  // namespace

FactoredRational::FactoredRational(Poly num, const std::vector<FactorPower>& factors)
    : num_(std::move(num)) {
    Rational absorb = 1;
    for (const auto& fp : factors) {
        if (fp.form.is_zero()) throw ValidationError("zero linear form in denominator");
        if (fp.form.num_y() != num_.num_y())
            throw ValidationError("variable-count mismatch in denominator factor");
        auto canon = fp.form.canonicalized();
        absorb *= rational_pow(canon.scale, fp.mult);
        add_factor(den_, canon.form, fp.mult);
    }
    num_ = num_.scaled(1 / absorb);
    if (num_.is_zero()) den_.clear();
}

Poly FactoredRational::den_poly() const {
    Poly d = Poly::constant(num_.num_y(), 1);
    for (const auto& fp : den_) d = d * Poly::from_linform(fp.form).pow(fp.mult);
    return d;
}

FactoredRational FactoredRational::operator-() const {
    FactoredRational r = *this;
    r.num_ = -r.num_;
    return r;
}

FactoredRational FactoredRational::operator+(const FactoredRational& o) const {
    if (num_y() != o.num_y()) throw ValidationError("variable-count mismatch");
    // least common multiple of the factored denominators
    std::vector<FactorPower> lcm = den_;
    for (const auto& fp : o.den_) {
        auto it = std::find_if(lcm.begin(), lcm.end(),
                               [&](const FactorPower& x) { return x.form == fp.form; });
        if (it == lcm.end())
            add_factor(lcm, fp.form, fp.mult);
        else
            it->mult = std::max(it->mult, fp.mult);
    }
    auto complement = [&](const std::vector<FactorPower>& d) {
        Poly c = Poly::constant(num_.num_y(), 1);
        for (const auto& fp : lcm) {
            unsigned have = 0;
            for (const auto& x : d)
                if (x.form == fp.form) have = x.mult;
            if (fp.mult > have) c = c * Poly::from_linform(fp.form).pow(fp.mult - have);
        }
        return c;
    };
    FactoredRational r(num_ * complement(den_) + o.num_ * complement(o.den_));
    r.den_ = lcm;
    if (r.num_.is_zero()) r.den_.clear();
    return r.normalized();
}

FactoredRational FactoredRational::operator-(const FactoredRational& o) const { return *this + -o; }

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    if (num_y() != o.num_y()) throw ValidationError("variable-count mismatch");
    FactoredRational r(num_ * o.num_);
    r.den_ = den_;
    for (const auto& fp : o.den_) add_factor(r.den_, fp.form, fp.mult);
    if (r.num_.is_zero()) r.den_.clear();
    return r.normalized();
}

FactoredRational FactoredRational::scaled(const Rational& s) const {
    FactoredRational r = *this;
    r.num_ = r.num_.scaled(s);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

FactoredRational FactoredRational::times_poly(const Poly& p) const {
    FactoredRational r = *this;
    r.num_ = r.num_ * p;
    if (r.num_.is_zero()) r.den_.clear();
    return r.normalized();
}

FactoredRational FactoredRational::divided_by_factors(const std::vector<FactorPower>& factors) const {
    FactoredRational extra(num_, factors);  // canonicalizes and absorbs scales
    std::vector<FactorPower> den = den_;
    for (const auto& fp : extra.den_) add_factor(den, fp.form, fp.mult);
    extra.den_ = std::move(den);
    if (extra.num_.is_zero()) extra.den_.clear();
    return extra.normalized();
}

FactoredRational FactoredRational::normalized() const {
    FactoredRational r = *this;
    if (r.num_.is_zero()) {
        r.den_.clear();
        return r;
    }
    std::vector<FactorPower> kept;
    for (const auto& fp : r.den_) {
        unsigned mult = fp.mult;
        while (mult > 0) {
            auto q = exact_divide_linear(r.num_, fp.form);
            if (!q) break;
            r.num_ = std::move(*q);
            --mult;
        }
        if (mult > 0) kept.push_back(FactorPower{fp.form, mult});
    }
    r.den_ = std::move(kept);
    return r;
}

FactoredRational FactoredRational::derivative_x() const {
    // d/dX [num * prod l_j^{-m_j}]
    FactoredRational r(num_.derivative_x());
    r.den_ = den_;
    if (r.num_.is_zero()) r.den_.clear();
    FactoredRational acc = r.normalized();
    for (std::size_t j = 0; j < den_.size(); ++j) {
        const auto& fp = den_[j];
        if (fp.form.x_coeff() == 0) continue;
        FactoredRational term(num_.scaled(-Rational(static_cast<long>(fp.mult)) * fp.form.x_coeff()));
        term.den_ = den_;
        term.den_[j].mult += 1;
        if (term.num_.is_zero()) term.den_.clear();
        acc = acc + term;
    }
    return acc;
}

FactoredRational FactoredRational::substitute_x(const LinForm& c) const {
    FactoredRational r(num_.substitute_x(c));
    for (const auto& fp : den_) {
        // mX + beta(Y)  ->  m*c(Y) + beta(Y)
        LinForm sub = c.scaled(fp.form.x_coeff());
        sub = sub + LinForm(0, fp.form.y_coeffs());
        if (!sub.is_zero()) {
            r = r.divided_by_factors({FactorPower{sub, fp.mult}});
        } else {
            throw Error("pole substitution produced a vanishing denominator factor");
        }
    }
    return r.normalized();
}

bool FactoredRational::value_equals(const FactoredRational& o) const {
    return num_ * o.den_poly() == o.num_ * den_poly();
}

bool operator==(const FactoredRational& a, const FactoredRational& b) {
    if (!(a.num_ == b.num_) || a.den_.size() != b.den_.size()) return false;
    for (std::size_t i = 0; i < a.den_.size(); ++i)
        if (!(a.den_[i].form == b.den_[i].form) || a.den_[i].mult != b.den_[i].mult) return false;
    return true;
}

}  // namespace eqres
