#include "eqres/stages.hpp"

#include <algorithm>
#include <set>

#include "eqres/errors.hpp"

namespace eqres {

namespace {

// coefficient of X^e in a univariate poly (num_y == 0)
Rational ucoeff(const Poly& p, int e) {
    if (e < 0) return 0;
    return p.coeff(Monomial{static_cast<unsigned>(e)});
}

}  // namespace

std::vector<std::string> StageSpace::class_names() const {
    std::vector<std::string> names;
    if (points.empty()) return names;
    for (const auto& [name, poly] : points.front().restrictions) names.push_back(name);
    return names;
}

const StagePoint& StageSpace::point(const std::string& label) const {
    for (const auto& p : points)
        if (p.label == label) return p;
    throw ValidationError("no stage point labelled '" + label + "'");
}

void validate_chain(const StageChain& chain) {
    if (chain.stages.empty()) throw ValidationError("empty stage chain");
    const StageSpace* prev = nullptr;
    for (const auto& stage : chain.stages) {
        const std::string where = "stage " + std::to_string(stage.index);
        if (stage.points.empty()) throw ValidationError(where + " has no fixed points");
        std::set<std::string> names;
        for (const auto& [n, p] : stage.points.front().restrictions) names.insert(n);
        std::set<std::string> labels;
        for (const auto& p : stage.points) {
            if (!labels.insert(p.label).second)
                throw ValidationError(where + ": duplicate label '" + p.label + "'");
            if (p.euler_coeff == 0)
                throw ValidationError(where + ": zero Euler coefficient at '" + p.label + "'");
            if (p.moment == 0)
                throw ValidationError(where + ": zero moment at '" + p.label + "'");
            std::set<std::string> here;
            for (const auto& [n, poly] : p.restrictions) {
                here.insert(n);
                if (poly.num_y() != 0)
                    throw ValidationError(where + ": restriction of '" + n + "' at '" + p.label +
                                          "' is not univariate");
            }
            if (here != names)
                throw ValidationError(where + ": class table differs between points");
        }
        for (const auto& [from, to] : stage.transfer) {
            if (!names.count(to))
                throw ValidationError(where + ": transfer target '" + to + "' is not a class here");
            if (prev) {
                std::set<std::string> prev_names;
                for (const auto& [n, p] : prev->points.front().restrictions) prev_names.insert(n);
                if (!prev_names.count(from))
                    throw ValidationError(where + ": transfer source '" + from +
                                          "' is not a class of stage " + std::to_string(prev->index));
            }
        }
        prev = &stage;
    }
}

Poly pi_project(const Poly& p) {
    Poly r(0);
    for (const auto& [mono, c] : p.terms()) {
        bool pure_x = true;
        for (std::size_t i = 1; i < mono.size(); ++i)
            if (mono[i] != 0) pure_x = false;
        if (pure_x) r += Poly::monomial(0, Monomial{mono[0]}, c);
    }
    return r;
}

StageTestResult ker_res_test(const StageSpace& stage, const std::string& eta,
                             unsigned extra_powers) {
    const auto names = stage.class_names();
    if (std::find(names.begin(), names.end(), eta) == names.end())
        throw ValidationError("class '" + eta + "' is not in the stage table");
    unsigned max_exp = 0;
    for (const auto& p : stage.points) max_exp = std::max(max_exp, p.euler_exponent);
    // higher powers of X only push the Laurent exponents up, so t beyond
    // the maximal pole order finds nothing new
    const unsigned tmax = max_exp + extra_powers;
    for (const auto& zeta : names) {
        for (unsigned t = 0; t <= tmax; ++t) {
            Rational value = 0;
            for (const auto& p : stage.points) {
                if (p.moment < 0) continue;
                const Poly prod = p.restrictions.at(eta) * p.restrictions.at(zeta);
                value += ucoeff(prod, static_cast<int>(p.euler_exponent) - 1 -
                                          static_cast<int>(t)) /
                         p.euler_coeff;
            }
            if (value != 0) return {false, StageWitness{zeta, t, value}};
        }
    }
    return {true, std::nullopt};
}

Rational stage_pairing(const StageSpace& stage, const std::string& a, const std::string& b) {
    Rational value = 0;
    for (const auto& p : stage.points) {
        if (p.moment < 0) continue;
        const Poly prod = p.restrictions.at(a) * p.restrictions.at(b);
        value += ucoeff(prod, static_cast<int>(p.euler_exponent) - 1) / p.euler_coeff;
    }
    return value;
}

StagesVerdict kernel_via_stages(const StageChain& chain, const std::string& name) {
    validate_chain(chain);
    StagesVerdict verdict;
    std::string current = name;
    for (std::size_t i = 0; i < chain.stages.size(); ++i) {
        const StageSpace& stage = chain.stages[i];
        if (i > 0) {
            auto it = stage.transfer.find(current);
            if (it == stage.transfer.end())
                throw ValidationError("transfer chain broken: class '" + current +
                                      "' has no image at stage " + std::to_string(stage.index));
            current = it->second;
        }
        auto result = ker_res_test(stage, current);
        if (result.in_kernel) {
            verdict.detected_stage = stage.index;
            verdict.final_name = current;
            return verdict;
        }
        verdict.stage_witnesses.emplace_back(stage.index, *result.witness);
    }
    verdict.final_name = current;
    return verdict;
}

ConsistencyReport stage_consistency_check(const StageChain& chain) {
    validate_chain(chain);
    ConsistencyReport report;
    for (std::size_t i = 0; i + 1 < chain.stages.size(); ++i) {
        const StageSpace& lo = chain.stages[i];
        const StageSpace& hi = chain.stages[i + 1];
        const std::string boundary = "stages " + std::to_string(lo.index) + "->" +
                                     std::to_string(hi.index);
        // classes present on both sides of the boundary
        std::vector<std::pair<std::string, std::string>> shared(hi.transfer.begin(),
                                                                hi.transfer.end());
        // The reduction pairing of a shared product at the lower stage must
        // match the ordinary integral read off the upper stage -- the
        // constant term of the full fixed-point sum -- up to one nonzero
        // ratio per boundary (the normalization constant of the residue
        // formula).
        std::optional<Rational> ratio;
        for (std::size_t a = 0; a < shared.size(); ++a) {
            for (std::size_t b = a; b < shared.size(); ++b) {
                const Rational lhs = stage_pairing(lo, shared[a].first, shared[b].first);
                // full-sum Laurent coefficients at the upper stage
                std::map<int, Rational> laurent;
                for (const auto& p : hi.points) {
                    const Poly prod =
                        p.restrictions.at(shared[a].second) * p.restrictions.at(shared[b].second);
                    for (const auto& [mono, c] : prod.terms()) {
                        const int e = static_cast<int>(mono[0]) -
                                      static_cast<int>(p.euler_exponent);
                        laurent[e] += c / p.euler_coeff;
                    }
                }
                for (const auto& [e, c] : laurent) {
                    if (e < 0 && c != 0) {
                        report.ok = false;
                        report.problems.push_back(
                            boundary + ": full localization sum of " + shared[a].second + "*" +
                            shared[b].second + " is not polynomial at the upper stage");
                    }
                }
                const Rational rhs = laurent.count(0) ? laurent[0] : Rational(0);
                if (lhs == 0) {
                    if (rhs != 0) {
                        report.ok = false;
                        report.problems.push_back(boundary + ": pairing of " + shared[a].first +
                                                  "*" + shared[b].first +
                                                  " vanishes below but not above");
                    }
                } else {
                    const Rational r = rhs / lhs;
                    if (r == 0) {
                        report.ok = false;
                        report.problems.push_back(boundary + ": pairing of " + shared[a].first +
                                                  "*" + shared[b].first +
                                                  " vanishes above but not below");
                    } else if (!ratio) {
                        ratio = r;
                    } else if (*ratio != r) {
                        report.ok = false;
                        report.problems.push_back(boundary + ": inconsistent pairing ratio for " +
                                                  shared[a].first + "*" + shared[b].first);
                    }
                }
            }
        }
    }
    return report;
}

StageSpace stage_from_space(const Space& space, const std::vector<EquivClass>& classes,
                            unsigned index) {
    StageSpace stage;
    stage.index = index;
    for (const auto& p : space.points()) {
        StagePoint sp;
        sp.label = p.label;
        sp.moment = p.moment;
        sp.euler_exponent = static_cast<unsigned>(p.weights.size());
        sp.euler_coeff = 1;
        for (const auto& w : p.weights) sp.euler_coeff *= w.x_coeff();
        for (const auto& cls : classes) sp.restrictions.emplace(cls.name, pi_project(cls.at(p.label)));
        stage.points.push_back(std::move(sp));
    }
    return stage;
}

}  // namespace eqres
