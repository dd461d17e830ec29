#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "eqres/morse.hpp"
#include "eqres/space.hpp"
#include "eqres/stages.hpp"
#include "eqres/toric.hpp"

namespace eqres {

using Json = nlohmann::json;

struct SpaceFile {
    Space space;
    std::map<std::string, EquivClass> classes;
};

/// Space file schema:
/// {"num_y_vars": m, "dim_half": n,
///  "points": [{"label": "...", "moment": "a/b", "weights": [[x, b1, ...], ...]}, ...],
///  "classes": {"name": {"degree": d, "restrictions": {"label": "poly", ...}}, ...}}
/// Rationals are strings ("a/b" or "a"); plain JSON integers are accepted.
SpaceFile space_from_json(const Json& j, SpaceOptions options = {});
Json space_to_json(const Space& space, const std::map<std::string, EquivClass>& classes);

/// Basis file: {"alpha_minus": {label: class...}, "alpha_plus": {...}}.
CanonicalBasis basis_from_json(const Json& j, const Space& space);
Json basis_to_json(const CanonicalBasis& basis);

/// Chain file: array of {"j": 1, "points": [...], "transfer": {...}}.
StageChain chain_from_json(const Json& j);
Json chain_to_json(const StageChain& chain);

/// Torus file: {"rank": r, "factors": [{"characters": [[...], ...]}, ...],
///  "points": [{"label": ..., "factor_indices": [...], "moment": [...],
///              "weights": [[...], ...]}, ...]}.
TorusSpace torus_from_json(const Json& j);
Json torus_to_json(const TorusSpace& space);

Json class_to_json(const EquivClass& cls);
Json verdict_to_json(const KernelVerdict& verdict);
Json stages_verdict_to_json(const StagesVerdict& verdict);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace eqres
