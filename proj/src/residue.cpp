#include "eqres/residue.hpp"

#include "eqres/errors.hpp"
#include "eqres/parser.hpp"

namespace eqres {

namespace {

void require_poles_off_axis(const FactoredRational& h) {
    for (const auto& fp : h.den())
        if (fp.form.x_coeff() == 0)
            throw PoleOnCircleAxis("denominator factor '" + print_linform(fp.form) +
                                   "' has zero X-coefficient");
}

}  // namespace

FactoredRational res_plus(const FactoredRational& h_in) {
    const FactoredRational h = h_in.normalized();
    require_poles_off_axis(h);
    const std::size_t m = h.num_y();
    FactoredRational total = FactoredRational::zero(m);
    if (h.is_zero()) return total;
    // Canonical factors are pairwise non-proportional, so each denominator
    // factor is one pole location X = -beta(Y)/mu of order `mult`.
    for (std::size_t k = 0; k < h.den().size(); ++k) {
        const FactorPower& fp = h.den()[k];
        const Rational& mu = fp.form.x_coeff();
        std::vector<Rational> c_coeffs;
        c_coeffs.reserve(fp.form.num_y());
        for (const auto& b : fp.form.y_coeffs()) c_coeffs.push_back(-b / mu);
        const LinForm pole_location(0, c_coeffs);
        // g = h * (X - c)^mult = (num / mu^mult) / (other factors)
        std::vector<FactorPower> others = h.den();
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
        FactoredRational g(h.num().scaled(1 / rational_pow(mu, fp.mult)), others);
        for (unsigned i = 1; i < fp.mult; ++i) g = g.derivative_x();
        g = g.scaled(Rational(1, factorial(fp.mult - 1)));
        total = total + g.substitute_x(pole_location);
    }
    return total.normalized();
}

FactoredRational res_gk(const FactoredRational& h_in, unsigned extra_depth) {
    const FactoredRational h = h_in.normalized();
    require_poles_off_axis(h);
    const std::size_t m = h.num_y();
    if (h.is_polynomial()) return FactoredRational::zero(m);

    unsigned total_mult = 0;
    for (const auto& fp : h.den()) total_mult += fp.mult;
    const int dp = h.num().degree_x();
    // The product of the factor series sits at X-exponents <= -total_mult;
    // a numerator term X^e reaches X^{-1} only from series exponent
    // -(e+1) >= -(dp+1), so deeper series terms cannot contribute.
    const int want = dp + 1 - static_cast<int>(total_mult);
    if (want < 0 && extra_depth == 0) return FactoredRational::zero(m);
    const unsigned depth = static_cast<unsigned>(std::max(want, 0)) + extra_depth;

    // series[t] is the coefficient of X^{-(total_mult + t)}
    std::vector<Poly> series{Poly::constant(m, 1)};
    Rational lead = 1;  // 1 / prod mu^mult
    for (const auto& fp : h.den()) {
        const Rational& mu = fp.form.x_coeff();
        lead /= rational_pow(mu, fp.mult);
        // 1/(mu X + beta)^a = (mu X)^{-a} sum_t binom(a+t-1, t) (-beta/(mu X))^t
        LinForm beta(0, fp.form.y_coeffs());
        const Poly beta_poly = Poly::from_linform(beta);
        std::vector<Poly> factor_series;
        Poly beta_pow = Poly::constant(m, 1);
        for (unsigned t = 0; t <= depth; ++t) {
            Rational coef(binomial(fp.mult + t - 1, t));
            if (t % 2 == 1) coef = -coef;
            coef /= rational_pow(mu, t);
            factor_series.push_back(beta_pow.scaled(coef));
            if (t < depth) beta_pow = beta_pow * beta_poly;
        }
        std::vector<Poly> next(depth + 1, Poly::zero(m));
        for (unsigned a = 0; a < series.size(); ++a) {
            if (series[a].is_zero()) continue;
            for (unsigned b = 0; a + b <= depth; ++b) next[a + b] += series[a] * factor_series[b];
        }
        series = std::move(next);
    }

    // coefficient of X^{-1}: pair numerator slice X^e with series depth
    // t = e + 1 - total_mult
    Poly result(m);
    for (const auto& [e, slice] : h.num().x_slices()) {
        const int t = static_cast<int>(e) + 1 - static_cast<int>(total_mult);
        if (t < 0 || t >= static_cast<int>(series.size())) continue;
        result += slice * series[static_cast<unsigned>(t)];
    }
    return FactoredRational(result.scaled(lead));
}

}  // namespace eqres
