#include "eqres/space.hpp"

#include <algorithm>
#include <set>

#include "eqres/errors.hpp"
#include "eqres/parser.hpp"
#include "eqres/residue.hpp"

namespace eqres {

Space::Space(std::size_t num_y, std::size_t dim_half, std::vector<FixedPoint> points,
             SpaceOptions options)
    : num_y_(num_y), dim_half_(dim_half), points_(std::move(points)) {
    if (dim_half_ == 0) throw ValidationError("dim_half must be at least 1");
    if (points_.empty()) throw ValidationError("a space needs at least one fixed point");
    std::set<std::string> labels;
    bool has_minus = false, has_plus = false;
    for (auto& p : points_) {
        if (!labels.insert(p.label).second)
            throw ValidationError("duplicate fixed-point label '" + p.label + "'");
        p.moment += options.moment_shift;
        if (p.moment == 0)
            throw NonRegularValue("fixed point '" + p.label +
                                  "' has moment 0; 0 must be a regular value");
        (p.moment > 0 ? has_plus : has_minus) = true;
        if (p.weights.size() != dim_half_)
            throw ValidationError("fixed point '" + p.label + "' has " +
                                  std::to_string(p.weights.size()) + " weights, expected " +
                                  std::to_string(dim_half_));
        for (const auto& w : p.weights) {
            if (w.num_y() != num_y_)
                throw ValidationError("weight with wrong variable count at '" + p.label + "'");
            if (w.x_coeff() == 0)
                throw ValidationError("weight '" + print_linform(w) + "' at '" + p.label +
                                      "' has zero X-coefficient; fixed points would not be "
                                      "isolated for the circle");
        }
        // canonical weight order within a point
        std::sort(p.weights.begin(), p.weights.end(),
                  [](const LinForm& a, const LinForm& b) { return LinForm::compare(a, b) < 0; });
    }
    if (!options.allow_one_sided && (!has_minus || !has_plus))
        throw ValidationError(
            "all fixed points lie on one side of 0; shift the moment map or pass "
            "the one-sided override");
}

const FixedPoint& Space::point(const std::string& label) const {
    for (const auto& p : points_)
        if (p.label == label) return p;
    throw ValidationError("no fixed point labelled '" + label + "'");
}

bool Space::has_point(const std::string& label) const {
    return std::any_of(points_.begin(), points_.end(),
                       [&](const FixedPoint& p) { return p.label == label; });
}

std::pair<std::vector<FixedPoint>, std::vector<FixedPoint>> split_fixed_points(
    const Space& space) {
    std::vector<FixedPoint> minus, plus;
    for (const auto& p : space.points()) {
        if (p.moment == 0) throw NonRegularValue("fixed point '" + p.label + "' has moment 0");
        (p.moment < 0 ? minus : plus).push_back(p);
    }
    auto by_moment = [](const FixedPoint& a, const FixedPoint& b) { return a.moment < b.moment; };
    std::sort(minus.begin(), minus.end(), by_moment);
    std::sort(plus.begin(), plus.end(), by_moment);
    return {std::move(minus), std::move(plus)};
}

const Poly& EquivClass::at(const std::string& label) const {
    auto it = restrictions.find(label);
    if (it == restrictions.end())
        throw ValidationError("class '" + name + "' has no restriction at '" + label + "'");
    return it->second;
}

EquivClass unit_class(const Space& space, const std::string& name) {
    EquivClass c{name, 0, {}};
    for (const auto& p : space.points())
        c.restrictions.emplace(p.label, Poly::constant(space.num_y(), 1));
    return c;
}

EquivClass class_product(const EquivClass& a, const EquivClass& b) {
    EquivClass c{a.name + "*" + b.name, a.degree + b.degree, {}};
    for (const auto& [label, pa] : a.restrictions) c.restrictions.emplace(label, pa * b.at(label));
    return c;
}

EquivClass class_add(const EquivClass& a, const EquivClass& b) {
    EquivClass c{a.name + "+" + b.name, std::max(a.degree, b.degree), {}};
    for (const auto& [label, pa] : a.restrictions) c.restrictions.emplace(label, pa + b.at(label));
    return c;
}

EquivClass class_scaled(const EquivClass& a, const Rational& s) {
    EquivClass c{a.name, a.degree, {}};
    for (const auto& [label, pa] : a.restrictions) c.restrictions.emplace(label, pa.scaled(s));
    return c;
}

EquivClass class_times_poly(const EquivClass& a, const Poly& p, const std::string& name) {
    const int d = p.homogeneous_degree().value_or(0);
    EquivClass c{name.empty() ? "(" + print_poly(p) + ")*" + a.name : name, a.degree + d, {}};
    for (const auto& [label, pa] : a.restrictions) c.restrictions.emplace(label, pa * p);
    return c;
}

void check_class(const Space& space, const EquivClass& cls) {
    for (const auto& p : space.points()) {
        auto it = cls.restrictions.find(p.label);
        if (it == cls.restrictions.end())
            throw ValidationError("class '" + cls.name + "' misses a restriction at '" + p.label +
                                  "'");
        if (it->second.num_y() != space.num_y())
            throw ValidationError("restriction of '" + cls.name + "' at '" + p.label +
                                  "' has the wrong variable count");
        if (!it->second.is_homogeneous_of_degree_or_zero(cls.degree))
            throw ValidationError("restriction of '" + cls.name + "' at '" + p.label +
                                  "' is not homogeneous of degree " + std::to_string(cls.degree));
    }
}

std::vector<FactorPower> weight_factors(const FixedPoint& f) {
    std::vector<FactorPower> factors;
    factors.reserve(f.weights.size());
    for (const auto& w : f.weights) factors.push_back(FactorPower{w, 1});
    return factors;
}

FactoredRational euler_reciprocal(const FixedPoint& f, std::size_t num_y) {
    return FactoredRational(Poly::constant(num_y, 1), weight_factors(f));
}

Poly euler_poly(const FixedPoint& f, std::size_t num_y) {
    Poly e = Poly::constant(num_y, 1);
    for (const auto& w : f.weights) e = e * Poly::from_linform(w);
    return e;
}

Poly neg_euler_poly(const FixedPoint& f, std::size_t num_y) {
    Poly e = Poly::constant(num_y, 1);
    for (const auto& w : f.weights)
        if (w.x_coeff() < 0) e = e * Poly::from_linform(w);
    return e;
}

Poly pos_euler_poly(const FixedPoint& f, std::size_t num_y) {
    Poly e = Poly::constant(num_y, 1);
    for (const auto& w : f.weights)
        if (w.x_coeff() > 0) e = e * Poly::from_linform(w);
    return e;
}

std::vector<FactorPower> neg_weight_factors(const FixedPoint& f) {
    std::vector<FactorPower> factors;
    for (const auto& w : f.weights)
        if (w.x_coeff() < 0) factors.push_back(FactorPower{w, 1});
    return factors;
}

LocalizationSum abbv_sum(const Space& space, const EquivClass& eta) {
    FactoredRational sum = FactoredRational::zero(space.num_y());
    for (const auto& p : space.points()) {
        FactoredRational term(eta.at(p.label), weight_factors(p));
        sum = sum + term;
    }
    sum = sum.normalized();
    return {sum, sum.is_polynomial()};
}

LocalizationSum pairing(const Space& space, const EquivClass& eta, const EquivClass& zeta) {
    auto [minus, plus] = split_fixed_points(space);
    FactoredRational sum = FactoredRational::zero(space.num_y());
    for (const auto& p : plus) {
        FactoredRational term(eta.at(p.label) * zeta.at(p.label), weight_factors(p));
        sum = sum + res_plus(term);
    }
    sum = sum.normalized();
    return {sum, sum.is_polynomial()};
}

ClassReport validate_class(const Space& space, const EquivClass& eta,
                           const std::vector<EquivClass>& witnesses) {
    ClassReport report;
    try {
        check_class(space, eta);
    } catch (const ValidationError& e) {
        report.ok = false;
        report.problems.push_back(e.what());
        return report;
    }
    std::vector<EquivClass> all{unit_class(space)};
    all.insert(all.end(), witnesses.begin(), witnesses.end());
    for (const auto& w : all) {
        auto sum = abbv_sum(space, class_product(eta, w));
        if (!sum.is_polynomial) {
            report.ok = false;
            report.failing_witness = w.name;
            report.problems.push_back("localization sum of eta*" + w.name +
                                      " is not a polynomial: " + print_fraction(sum.value));
            return report;
        }
    }
    return report;
}

}  // namespace eqres
