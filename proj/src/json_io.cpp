#include "eqres/json_io.hpp"

#include <fstream>

#include "eqres/errors.hpp"
#include "eqres/parser.hpp"

namespace eqres {

namespace {

Rational json_rational(const Json& j, const std::string& where) {
    try {
        if (j.is_string()) return rational_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    } catch (const ParseError& e) {
        throw ValidationError(where + ": " + e.what());
    }
    throw ValidationError(where + ": expected a rational as a string or integer");
}

Poly json_poly(const Json& j, std::size_t num_y, const std::string& where) {
    if (!j.is_string()) throw ValidationError(where + ": expected a polynomial string");
    try {
        return parse_poly(j.get<std::string>(), num_y);
    } catch (const ParseError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

EquivClass json_class(const std::string& name, const Json& j, std::size_t num_y,
                      const std::string& where) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("restrictions"))
        throw ValidationError(where + ": a class needs 'degree' and 'restrictions'");
    EquivClass cls{name, j.at("degree").get<int>(), {}};
    for (const auto& [label, poly] : j.at("restrictions").items())
        cls.restrictions.emplace(label, json_poly(poly, num_y, where + ".restrictions." + label));
    return cls;
}

Json rational_json(const Rational& r) { return to_string(r); }

Json weight_json(const LinForm& w) {
    Json arr = Json::array();
    arr.push_back(rational_json(w.x_coeff()));
    for (const auto& c : w.y_coeffs()) arr.push_back(rational_json(c));
    return arr;
}

}  // namespace

SpaceFile space_from_json(const Json& j, SpaceOptions options) {
    if (!j.is_object()) throw ValidationError("space file: expected a JSON object");
    for (const char* key : {"num_y_vars", "dim_half", "points"})
        if (!j.contains(key))
            throw ValidationError(std::string("space file: missing '") + key + "'");
    const std::size_t num_y = j.at("num_y_vars").get<std::size_t>();
    const std::size_t dim_half = j.at("dim_half").get<std::size_t>();
    std::vector<FixedPoint> points;
    for (const auto& pj : j.at("points")) {
        FixedPoint p;
        if (!pj.contains("label")) throw ValidationError("space file: point without 'label'");
        p.label = pj.at("label").get<std::string>();
        const std::string where = "point '" + p.label + "'";
        p.moment = json_rational(pj.at("moment"), where + ".moment");
        if (!pj.contains("weights") || !pj.at("weights").is_array())
            throw ValidationError(where + ": missing 'weights' array");
        for (const auto& wj : pj.at("weights")) {
            if (!wj.is_array() || wj.size() != num_y + 1)
                throw ValidationError(where + ": each weight needs " + std::to_string(num_y + 1) +
                                      " entries (X coefficient first)");
            Rational x = json_rational(wj.at(0), where + ".weights");
            std::vector<Rational> ys;
            for (std::size_t i = 1; i <= num_y; ++i)
                ys.push_back(json_rational(wj.at(i), where + ".weights"));
            p.weights.emplace_back(std::move(x), std::move(ys));
        }
        points.push_back(std::move(p));
    }
    SpaceFile file{Space(num_y, dim_half, std::move(points), options), {}};
    if (j.contains("classes")) {
        for (const auto& [name, cj] : j.at("classes").items()) {
            EquivClass cls = json_class(name, cj, num_y, "class '" + name + "'");
            check_class(file.space, cls);
            file.classes.emplace(name, std::move(cls));
        }
    }
    return file;
}

Json class_to_json(const EquivClass& cls) {
    Json restrictions = Json::object();
    for (const auto& [label, poly] : cls.restrictions) restrictions[label] = print_poly(poly);
    return Json{{"degree", cls.degree}, {"restrictions", restrictions}};
}

Json space_to_json(const Space& space, const std::map<std::string, EquivClass>& classes) {
    Json points = Json::array();
    for (const auto& p : space.points()) {
        Json weights = Json::array();
        for (const auto& w : p.weights) weights.push_back(weight_json(w));
        points.push_back(Json{{"label", p.label},
                              {"moment", rational_json(p.moment)},
                              {"weights", weights}});
    }
    Json cj = Json::object();
    for (const auto& [name, cls] : classes) cj[name] = class_to_json(cls);
    return Json{{"num_y_vars", space.num_y()},
                {"dim_half", space.dim_half()},
                {"points", points},
                {"classes", cj}};
}

CanonicalBasis basis_from_json(const Json& j, const Space& space) {
    if (!j.is_object() || !j.contains("alpha_minus") || !j.contains("alpha_plus"))
        throw ValidationError("basis file: expected 'alpha_minus' and 'alpha_plus'");
    CanonicalBasis basis;
    auto read = [&](const char* key, std::map<std::string, EquivClass>& into) {
        for (const auto& [label, cj] : j.at(key).items()) {
            if (!space.has_point(label))
                throw ValidationError(std::string("basis file: ") + key + " keyed by unknown "
                                      "fixed point '" + label + "'");
            EquivClass cls = json_class(std::string(key == std::string("alpha_minus") ? "am_" : "ap_") +
                                            label,
                                        cj, space.num_y(), std::string(key) + "." + label);
            check_class(space, cls);
            into.emplace(label, std::move(cls));
        }
    };
    read("alpha_minus", basis.alpha_minus);
    read("alpha_plus", basis.alpha_plus);
    return basis;
}

Json basis_to_json(const CanonicalBasis& basis) {
    Json minus = Json::object(), plus = Json::object();
    for (const auto& [label, cls] : basis.alpha_minus) minus[label] = class_to_json(cls);
    for (const auto& [label, cls] : basis.alpha_plus) plus[label] = class_to_json(cls);
    return Json{{"alpha_minus", minus}, {"alpha_plus", plus}};
}

StageChain chain_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("chain file: expected an array of stages");
    StageChain chain;
    for (const auto& sj : j) {
        StageSpace stage;
        if (!sj.contains("j") || !sj.contains("points"))
            throw ValidationError("chain file: each stage needs 'j' and 'points'");
        stage.index = sj.at("j").get<unsigned>();
        for (const auto& pj : sj.at("points")) {
            StagePoint p;
            p.label = pj.at("label").get<std::string>();
            const std::string where =
                "stage " + std::to_string(stage.index) + " point '" + p.label + "'";
            p.moment = json_rational(pj.at("moment"), where + ".moment");
            p.euler_exponent = pj.at("euler_exponent").get<unsigned>();
            p.euler_coeff = json_rational(pj.at("euler_coeff"), where + ".euler_coeff");
            for (const auto& [name, poly] : pj.at("restrictions").items())
                p.restrictions.emplace(name, json_poly(poly, 0, where + "." + name));
            stage.points.push_back(std::move(p));
        }
        if (sj.contains("transfer"))
            for (const auto& [from, to] : sj.at("transfer").items())
                stage.transfer.emplace(from, to.get<std::string>());
        chain.stages.push_back(std::move(stage));
    }
    validate_chain(chain);
    return chain;
}

Json chain_to_json(const StageChain& chain) {
    Json stages = Json::array();
    for (const auto& stage : chain.stages) {
        Json points = Json::array();
        for (const auto& p : stage.points) {
            Json restrictions = Json::object();
            for (const auto& [name, poly] : p.restrictions) restrictions[name] = print_poly(poly);
            points.push_back(Json{{"label", p.label},
                                  {"moment", rational_json(p.moment)},
                                  {"euler_exponent", p.euler_exponent},
                                  {"euler_coeff", rational_json(p.euler_coeff)},
                                  {"restrictions", restrictions}});
        }
        Json transfer = Json::object();
        for (const auto& [from, to] : stage.transfer) transfer[from] = to;
        stages.push_back(Json{{"j", stage.index}, {"points", points}, {"transfer", transfer}});
    }
    return stages;
}

TorusSpace torus_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("points") || !j.contains("factors"))
        throw ValidationError("torus file: expected 'rank', 'factors' and 'points'");
    TorusSpace space;
    space.rank = j.at("rank").get<std::size_t>();
    for (const auto& fj : j.at("factors")) {
        ProjFactor f;
        for (const auto& cj : fj.at("characters")) {
            IntVec c;
            for (const auto& e : cj) c.push_back(e.get<long long>());
            if (c.size() != space.rank)
                throw ValidationError("torus file: character with wrong length");
            f.characters.push_back(std::move(c));
        }
        space.factors.push_back(std::move(f));
    }
    for (const auto& pj : j.at("points")) {
        TorusPoint p;
        p.label = pj.at("label").get<std::string>();
        for (const auto& e : pj.at("factor_indices")) p.factor_indices.push_back(e.get<std::size_t>());
        for (const auto& e : pj.at("moment"))
            p.moment.push_back(json_rational(e, "torus point '" + p.label + "'"));
        for (const auto& wj : pj.at("weights")) {
            IntVec w;
            for (const auto& e : wj) w.push_back(e.get<long long>());
            if (w.size() != space.rank)
                throw ValidationError("torus file: weight with wrong length at '" + p.label + "'");
            p.weights.push_back(std::move(w));
        }
        space.points.push_back(std::move(p));
    }
    return space;
}

Json torus_to_json(const TorusSpace& space) {
    Json factors = Json::array();
    for (const auto& f : space.factors) {
        Json chars = Json::array();
        for (const auto& c : f.characters) chars.push_back(c);
        factors.push_back(Json{{"characters", chars}});
    }
    Json points = Json::array();
    for (const auto& p : space.points) {
        Json moment = Json::array();
        for (const auto& c : p.moment) moment.push_back(rational_json(c));
        points.push_back(Json{{"label", p.label},
                              {"factor_indices", p.factor_indices},
                              {"moment", moment},
                              {"weights", p.weights}});
    }
    return Json{{"rank", space.rank}, {"factors", factors}, {"points", points}};
}

Json verdict_to_json(const KernelVerdict& verdict) {
    Json j;
    j["in_kernel"] = verdict.in_kernel;
    Json coeffs = Json::object();
    for (const auto& [label, r] : verdict.decomposition.coeffs)
        coeffs[label] = print_fraction(r);
    j["coefficients"] = coeffs;
    if (verdict.in_kernel) {
        Json xp = Json::object(), xm = Json::object();
        for (const auto& [label, p] : verdict.xi_plus) xp[label] = print_poly(p);
        for (const auto& [label, p] : verdict.xi_minus) xm[label] = print_poly(p);
        j["xi_plus"] = xp;
        j["xi_minus"] = xm;
    } else if (verdict.witness) {
        j["witness"] = Json{{"point", verdict.witness->point},
                            {"polynomial", print_poly(verdict.witness->polynomial)},
                            {"pairing", print_fraction(verdict.witness->residue)},
                            {"zeta", class_to_json(verdict.witness->zeta)}};
    }
    return j;
}

Json stages_verdict_to_json(const StagesVerdict& verdict) {
    Json j;
    j["detected"] = verdict.detected_stage.has_value();
    if (verdict.detected_stage) j["stage"] = *verdict.detected_stage;
    j["final_name"] = verdict.final_name;
    Json witnesses = Json::array();
    for (const auto& [stage, w] : verdict.stage_witnesses)
        witnesses.push_back(Json{{"stage", stage},
                                 {"zeta", w.zeta},
                                 {"power", w.power},
                                 {"value", rational_json(w.value)}});
    j["witnesses"] = witnesses;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace eqres
