#include "eqres/toric.hpp"

#include <algorithm>
#include <numeric>

#include "eqres/errors.hpp"

namespace eqres {

namespace {

using IntMat = std::vector<std::vector<Integer>>;

IntMat identity(std::size_t r) {
    IntMat m(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

Integer det(const IntMat& m) {
    const std::size_t r = m.size();
    if (r == 1) return m[0][0];
    Integer d = 0;
    for (std::size_t j = 0; j < r; ++j) {
        IntMat minor;
        for (std::size_t i = 1; i < r; ++i) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < r; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Integer term = m[0][j] * det(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

IntMat inverse_unimodular(const IntMat& m) {
    const std::size_t r = m.size();
    const Integer d = det(m);
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    IntMat inv(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            IntMat minor;
            for (std::size_t a = 0; a < r; ++a) {
                if (a == j) continue;
                std::vector<Integer> row;
                for (std::size_t b = 0; b < r; ++b)
                    if (b != i) row.push_back(m[a][b]);
                minor.push_back(std::move(row));
            }
            Integer cof = (r == 1) ? Integer(1) : det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof * d;  // d == 1/d for unimodular matrices
        }
    }
    return inv;
}

/// Unimodular integer matrix whose first row is the primitive vector xi.
/// Column-reduce xi to e_1 with elementary operations collected in V, so
/// xi V = e_1^T and the inverse of V has first row xi.
IntMat completion_matrix(const IntVec& xi) {
    const std::size_t r = xi.size();
    std::vector<Integer> a(r);
    for (std::size_t i = 0; i < r; ++i) a[i] = static_cast<long>(xi[i]);
    IntMat v = identity(r);
    for (std::size_t i = 1; i < r; ++i) {
        if (a[i] == 0) continue;
        Integer g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[0].get_mpz_t(),
                   a[i].get_mpz_t());
        const Integer a0 = a[0], ai = a[i];
        for (std::size_t row = 0; row < r; ++row) {
            const Integer c0 = v[row][0], ci = v[row][i];
            v[row][0] = x * c0 + y * ci;
            v[row][i] = -(ai / g) * c0 + (a0 / g) * ci;
        }
        a[0] = g;
        a[i] = 0;
    }
    if (a[0] == -1) {
        for (std::size_t row = 0; row < r; ++row) v[row][0] = -v[row][0];
        a[0] = 1;
    }
    if (a[0] != 1) throw Error("xi is not primitive");
    return inverse_unimodular(v);
}

long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const std::vector<Rational>& a, const IntVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(static_cast<long>(b[i]));
    return s;
}

LinForm rewrite_weight(const IntVec& w, const IntMat& completion) {
    const std::size_t r = completion.size();
    std::vector<Integer> coords(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) coords[i] += completion[i][k] * Integer(static_cast<long>(w[k]));
    std::vector<Rational> ys;
    for (std::size_t i = 1; i < r; ++i) ys.emplace_back(coords[i]);
    return LinForm(Rational(coords[0]), std::move(ys));
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

TorusSpace cpn_space(std::size_t n) {
    if (n < 1) throw ValidationError("cpn requires n >= 1");
    TorusSpace space;
    space.rank = n;
    ProjFactor factor;
    factor.characters.push_back(IntVec(n, 0));  // Lambda_0 = 0
    for (std::size_t i = 1; i <= n; ++i) {
        IntVec e(n, 0);
        e[i - 1] = 1;
        factor.characters.push_back(e);
    }
    space.factors.push_back(factor);
    for (std::size_t i = 0; i <= n; ++i) {
        TorusPoint p;
        p.label = "p" + std::to_string(i);
        p.factor_indices = {i};
        for (long long c : factor.characters[i]) p.moment.emplace_back(static_cast<long>(c));
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) p.weights.push_back(sub(factor.characters[j], factor.characters[i]));
        space.points.push_back(std::move(p));
    }
    return space;
}

TorusSpace product_space(const TorusSpace& a, const TorusSpace& b) {
    TorusSpace prod;
    prod.rank = a.rank + b.rank;
    auto embed = [&](const IntVec& v, bool left) {
        IntVec r(prod.rank, 0);
        const std::size_t off = left ? 0 : a.rank;
        for (std::size_t i = 0; i < v.size(); ++i) r[off + i] = v[i];
        return r;
    };
    for (const auto& f : a.factors) {
        ProjFactor nf;
        for (const auto& c : f.characters) nf.characters.push_back(embed(c, true));
        prod.factors.push_back(std::move(nf));
    }
    for (const auto& f : b.factors) {
        ProjFactor nf;
        for (const auto& c : f.characters) nf.characters.push_back(embed(c, false));
        prod.factors.push_back(std::move(nf));
    }
    for (const auto& pa : a.points) {
        for (const auto& pb : b.points) {
            TorusPoint p;
            p.label = pa.label + "x" + pb.label;
            p.factor_indices = pa.factor_indices;
            p.factor_indices.insert(p.factor_indices.end(), pb.factor_indices.begin(),
                                    pb.factor_indices.end());
            p.moment = pa.moment;
            p.moment.insert(p.moment.end(), pb.moment.begin(), pb.moment.end());
            for (const auto& w : pa.weights) p.weights.push_back(embed(w, true));
            for (const auto& w : pb.weights) p.weights.push_back(embed(w, false));
            prod.points.push_back(std::move(p));
        }
    }
    return prod;
}

CircleChoice generic_circle(const TorusSpace& space, unsigned search_bound) {
    const std::size_t r = space.rank;
    if (r == 0) throw ValidationError("torus space has rank 0");

    auto admissible = [&](const IntVec& xi) {
        for (const auto& p : space.points)
            for (const auto& w : p.weights)
                if (dot(w, xi) == 0) return false;
        std::vector<Rational> vals;
        for (const auto& p : space.points) vals.push_back(dot(p.moment, xi));
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
            if (vals[i] == vals[i + 1]) return false;
        return true;
    };

    // sup-norm shells, lexicographic within a shell; a circle equals its
    // inverse, so only vectors with positive first nonzero entry are tried
    for (long long s = 1; s <= static_cast<long long>(search_bound); ++s) {
        IntVec v(r, -s);
        while (true) {
            long long sup = 0;
            for (long long c : v) sup = std::max(sup, std::llabs(c));
            if (sup == s) {
                long long first = 0;
                for (long long c : v)
                    if (c != 0) {
                        first = c;
                        break;
                    }
                long long g = 0;
                for (long long c : v) g = std::gcd(g, std::llabs(c));
                if (first > 0 && g == 1 && admissible(v)) {
                    CircleChoice choice;
                    choice.xi = v;
                    const IntMat c = completion_matrix(v);
                    for (const auto& row : c) {
                        IntVec lrow;
                        for (const auto& e : row) {
                            if (!e.fits_slong_p()) throw Error("completion entry overflow");
                            lrow.push_back(e.get_si());
                        }
                        choice.completion.push_back(std::move(lrow));
                    }
                    // shift: put 0 in the middle of the gap nearest the median
                    std::vector<Rational> vals;
                    for (const auto& p : space.points) vals.push_back(dot(p.moment, v));
                    std::sort(vals.begin(), vals.end());
                    if (vals.size() < 2)
                        throw ValidationError("need at least two fixed points to place 0");
                    const std::size_t k = (vals.size() - 1) / 2;
                    choice.suggested_shift = -(vals[k - 0] + vals[k + 1]) / 2;
                    return choice;
                }
            }
            // odometer over [-s, s]^r
            std::size_t i = r;
            while (i > 0) {
                --i;
                if (v[i] < s) {
                    ++v[i];
                    for (std::size_t j = i + 1; j < r; ++j) v[j] = -s;
                    break;
                }
                if (i == 0) {
                    i = r + 1;  // done with this shell
                    break;
                }
            }
            if (i == r + 1) break;
        }
    }
    throw SearchExhausted("no generic circle with entries bounded by " +
                          std::to_string(search_bound));
}

Space to_circle_space(const TorusSpace& space, const CircleChoice& choice, const Rational& shift) {
    IntMat completion;
    for (const auto& row : choice.completion) {
        std::vector<Integer> irow;
        for (long long e : row) irow.emplace_back(static_cast<long>(e));
        completion.push_back(std::move(irow));
    }
    std::vector<FixedPoint> points;
    std::size_t dim_half = space.points.empty() ? 0 : space.points.front().weights.size();
    for (const auto& p : space.points) {
        FixedPoint f;
        f.label = p.label;
        f.moment = dot(p.moment, choice.xi) + shift;
        for (const auto& w : p.weights) f.weights.push_back(rewrite_weight(w, completion));
        points.push_back(std::move(f));
    }
    return Space(space.rank - 1, dim_half, std::move(points));
}

BuiltSpace build_circle_space(const TorusSpace& space, const CircleChoice& choice,
                              const Rational& shift) {
    Space circle = to_circle_space(space, choice, shift);
    const std::size_t m = circle.num_y();
    IntMat completion;
    for (const auto& row : choice.completion) {
        std::vector<Integer> irow;
        for (long long e : row) irow.emplace_back(static_cast<long>(e));
        completion.push_back(std::move(irow));
    }

    // Per projective factor, the coordinate order induced by the circle.
    struct FactorOrder {
        std::vector<std::size_t> order;           // indices sorted by pairing
        std::vector<std::size_t> position;        // index -> rank in the order
    };
    std::vector<FactorOrder> orders;
    for (const auto& factor : space.factors) {
        FactorOrder fo;
        fo.order.resize(factor.characters.size());
        std::iota(fo.order.begin(), fo.order.end(), std::size_t{0});
        std::vector<long long> pairing;
        for (const auto& c : factor.characters) pairing.push_back(dot(c, choice.xi));
        std::sort(fo.order.begin(), fo.order.end(),
                  [&](std::size_t a, std::size_t b) { return pairing[a] < pairing[b]; });
        for (std::size_t i = 0; i + 1 < fo.order.size(); ++i)
            if (pairing[fo.order[i]] == pairing[fo.order[i + 1]])
                throw ValidationError("circle does not separate a factor's characters");
        fo.position.resize(fo.order.size());
        for (std::size_t pos = 0; pos < fo.order.size(); ++pos) fo.position[fo.order[pos]] = pos;
        orders.push_back(std::move(fo));
    }

    // alpha^-_f(i)|_{i'} = (-1)^pos(i) prod_{pos(j) < pos(i)} (Lambda_{i'} - Lambda_j)
    // and dually for alpha^+; the sign pins the diagonal to the Euler class
    // of the downward/upward bundle.
    auto factor_restriction = [&](std::size_t f, std::size_t i, std::size_t iprime, bool lower) {
        const auto& chars = space.factors[f].characters;
        const auto& fo = orders[f];
        const std::size_t pos = fo.position[i];
        Poly r = Poly::constant(m, 1);
        std::size_t count = 0;
        for (std::size_t p = 0; p < fo.order.size(); ++p) {
            if (lower ? (p >= pos) : (p <= pos)) continue;
            const std::size_t j = fo.order[p];
            r = r * Poly::from_linform(rewrite_weight(sub(chars[iprime], chars[j]), completion));
            ++count;
        }
        if (count % 2 == 1) r = -r;
        return r;
    };

    CanonicalBasis basis;
    for (const auto& p : space.points) {
        EquivClass am{"am_" + p.label, 0, {}};
        EquivClass ap{"ap_" + p.label, 0, {}};
        int deg_m = 0, deg_p = 0;
        for (std::size_t f = 0; f < space.factors.size(); ++f) {
            deg_m += static_cast<int>(orders[f].position[p.factor_indices[f]]);
            deg_p += static_cast<int>(orders[f].order.size() - 1 -
                                      orders[f].position[p.factor_indices[f]]);
        }
        am.degree = deg_m;
        ap.degree = deg_p;
        for (const auto& q : space.points) {
            Poly rm = Poly::constant(m, 1);
            Poly rp = Poly::constant(m, 1);
            for (std::size_t f = 0; f < space.factors.size(); ++f) {
                rm = rm * factor_restriction(f, p.factor_indices[f], q.factor_indices[f], true);
                rp = rp * factor_restriction(f, p.factor_indices[f], q.factor_indices[f], false);
            }
            am.restrictions.emplace(q.label, std::move(rm));
            ap.restrictions.emplace(q.label, std::move(rp));
        }
        basis.alpha_minus.emplace(p.label, std::move(am));
        basis.alpha_plus.emplace(p.label, std::move(ap));
    }

    auto report = validate_basis(circle, basis);
    if (!report.ok) {
        std::string msg = "constructed basis failed validation:";
        for (const auto& v : report.violations) msg += "\n  " + v.detail;
        throw Error(msg);
    }

    BuiltSpace built{std::move(circle), basis, {}};
    built.classes.emplace("one", unit_class(built.space, "one"));
    for (const auto& [label, cls] : basis.alpha_minus) built.classes.emplace(cls.name, cls);
    for (const auto& [label, cls] : basis.alpha_plus) built.classes.emplace(cls.name, cls);
    return built;
}

}  // namespace eqres
