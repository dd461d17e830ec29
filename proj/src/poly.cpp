#include "eqres/poly.hpp"

#include <algorithm>
#include <cassert>

#include "eqres/errors.hpp"

namespace eqres {

// ---------------------------------------------------------------------------
// LinForm

CanonicalLinForm LinForm::canonicalized() const {
    if (is_zero()) throw Error("cannot canonicalize the zero linear form");
    // lcm of denominators, then gcd of numerators, then the sign of the
    // first nonzero coefficient.
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    auto account = [&](const Rational& c) {
        if (c == 0) return;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    };
    account(x_);
    for (const auto& c : y_) account(c);
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    const Rational* first = nullptr;
    if (x_ != 0) {
        first = &x_;
    } else {
        for (const auto& c : y_)
            if (c != 0) {
                first = &c;
                break;
            }
    }
    if (*first < 0) scale = -scale;
    return CanonicalLinForm{scaled(1 / scale), scale};
}

int LinForm::compare(const LinForm& a, const LinForm& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_ ? -1 : 1;
    const std::size_t n = std::min(a.y_.size(), b.y_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.y_[i] != b.y_[i]) return a.y_[i] < b.y_[i] ? -1 : 1;
    if (a.y_.size() != b.y_.size()) return a.y_.size() < b.y_.size() ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Poly

void Poly::check_same_vars(const Poly& a, const Poly& b) {
    if (a.num_y_ != b.num_y_)
        throw ValidationError("variable-count mismatch: " + std::to_string(a.num_y_) + " vs " +
                              std::to_string(b.num_y_) + " Y variables");
}

void Poly::insert(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::constant(std::size_t num_y, const Rational& c) {
    Poly p(num_y);
    p.insert(Monomial(num_y + 1, 0), c);
    return p;
}

Poly Poly::variable_x(std::size_t num_y) {
    Monomial m(num_y + 1, 0);
    m[0] = 1;
    return monomial(num_y, m, 1);
}

Poly Poly::variable_y(std::size_t num_y, std::size_t i) {
    assert(i >= 1 && i <= num_y);
    Monomial m(num_y + 1, 0);
    m[i] = 1;
    return monomial(num_y, m, 1);
}

Poly Poly::monomial(std::size_t num_y, Monomial exps, const Rational& c) {
    if (exps.size() != num_y + 1) throw ValidationError("exponent vector has wrong length");
    Poly p(num_y);
    p.insert(exps, c);
    return p;
}

Poly Poly::from_linform(const LinForm& l) {
    Poly p(l.num_y());
    Monomial m(l.num_y() + 1, 0);
    m[0] = 1;
    p.insert(m, l.x_coeff());
    m[0] = 0;
    for (std::size_t i = 0; i < l.num_y(); ++i) {
        m[i + 1] = 1;
        p.insert(m, l.y_coeffs()[i]);
        m[i + 1] = 0;
    }
    return p;
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    for (unsigned e : m)
        if (e != 0) return std::nullopt;
    return c;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

static unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(monomial_degree(m)));
    return d;
}

int Poly::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[0]));
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = static_cast<int>(monomial_degree(terms_.begin()->first));
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(monomial_degree(m)) != d) return std::nullopt;
    return d;
}

bool Poly::is_homogeneous_of_degree_or_zero(int d) const {
    if (terms_.empty()) return true;
    return homogeneous_degree() == d;
}

Poly Poly::operator-() const {
    Poly r(num_y_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_vars(a, b);
    Poly r(a.num_y_);
    Monomial m(a.num_y_ + 1);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.insert(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& s) const {
    Poly r(num_y_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(num_y_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative_x() const {
    Poly r(num_y_);
    for (const auto& [m, c] : terms_) {
        if (m[0] == 0) continue;
        Monomial d = m;
        d[0] -= 1;
        r.insert(d, c * m[0]);
    }
    return r;
}

Poly Poly::substitute_x(const LinForm& c) const {
    if (c.x_coeff() != 0)
        throw ValidationError("substitution target for X must not involve X");
    if (c.num_y() != num_y_) throw ValidationError("variable-count mismatch in substitution");
    const Poly cp = Poly::from_linform(c);
    // powers of c(Y) up to the X-degree
    std::vector<Poly> cpow{Poly::constant(num_y_, 1)};
    const int dx = degree_x();
    for (int e = 1; e <= dx; ++e) cpow.push_back(cpow.back() * cp);
    Poly r(num_y_);
    for (const auto& [m, coef] : terms_) {
        Monomial base = m;
        base[0] = 0;
        r += cpow[m[0]] * Poly::monomial(num_y_, base, coef);
    }
    return r;
}

std::map<unsigned, Poly> Poly::x_slices() const {
    std::map<unsigned, Poly> slices;
    for (const auto& [m, c] : terms_) {
        auto it = slices.find(m[0]);
        if (it == slices.end()) it = slices.emplace(m[0], Poly(num_y_)).first;
        Monomial base = m;
        base[0] = 0;
        it->second.insert(base, c);
    }
    return slices;
}

// ---------------------------------------------------------------------------
// Division by linear forms

std::optional<Poly> exact_divide_linear(const Poly& p, const LinForm& l) {
    if (l.is_zero()) throw ValidationError("division by the zero linear form");
    if (l.num_y() != p.num_y()) throw ValidationError("variable-count mismatch in division");
    // main variable: any with nonzero coefficient in l (0 = X, i = Y_i)
    std::size_t v = 0;
    Rational lead = l.x_coeff();
    if (lead == 0) {
        for (std::size_t i = 0; i < l.num_y(); ++i)
            if (l.y_coeffs()[i] != 0) {
                v = i + 1;
                lead = l.y_coeffs()[i];
                break;
            }
    }
    // rest = l - lead * x_v, linear in the remaining variables
    Poly rest = Poly::from_linform(l);
    {
        Monomial m(p.num_y() + 1, 0);
        m[v] = 1;
        rest -= Poly::monomial(p.num_y(), m, lead);
    }
    // univariate synthetic division in x_v; the leading coefficient of l
    // in x_v is the nonzero constant `lead`, so each step is exact.
    Poly rem = p;
    Poly quot(p.num_y());
    while (true) {
        unsigned dv = 0;
        for (const auto& [m, c] : rem.terms()) dv = std::max(dv, m[v]);
        if (dv == 0) break;
        Poly top(p.num_y());
        for (const auto& [m, c] : rem.terms()) {
            if (m[v] != dv) continue;
            Monomial q = m;
            q[v] -= 1;
            top += Poly::monomial(p.num_y(), q, c / lead);
        }
        quot += top;
        Monomial mv(p.num_y() + 1, 0);
        mv[v] = 1;
        rem -= top * Poly::monomial(p.num_y(), mv, lead);
        rem -= top * rest;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

std::optional<Poly> divides_product(const Poly& p, const std::vector<FactorPower>& factors) {
    Poly q = p;
    for (const auto& fp : factors) {
        for (unsigned i = 0; i < fp.mult; ++i) {
            auto next = exact_divide_linear(q, fp.form);
            if (!next) return std::nullopt;
            q = std::move(*next);
        }
    }
    return q;
}

}  // namespace eqres
