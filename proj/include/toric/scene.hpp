#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/linalg.hpp"

namespace toric {

/// Parsed scene file: a polytope, optionally an affine subtorus datum
/// (spanning vectors plus componentwise-exponentiated offset), and
/// command options.
struct SceneDocument {
    int dimension = 0;
    std::vector<RatVec> polytope;
    std::optional<std::vector<IntVec>> subspace;  // absent != k = 0
    RatVec offset_exp;                            // defaults to all ones
    struct Options {
        int samples = 200;
        int box = 5;
        double tolerance = 1e-9;
    } options;
};

namespace detail {

inline std::pair<int, int> line_column(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

inline Rat json_rational(const nlohmann::json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw SemanticError(where + ": rationals must be integers or \"p/q\" strings");
}

inline Int json_integer(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SemanticError(where + ": expected an integer");
    return Int(j.get<long long>());
}

}  // namespace detail

inline SceneDocument parse_scene(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw SyntaxError(line, col, e.what());
    }
    if (!doc.is_object()) throw SemanticError("scene must be a JSON object");

    SceneDocument scene;
    if (!doc.contains("polytope") || !doc["polytope"].is_array() || doc["polytope"].empty())
        throw SemanticError("scene needs a nonempty 'polytope' array of vertex rows");

    for (const auto& row : doc["polytope"]) {
        if (!row.is_array()) throw SemanticError("polytope rows must be arrays");
        RatVec v;
        for (const auto& entry : row) v.push_back(detail::json_rational(entry, "polytope"));
        scene.polytope.push_back(std::move(v));
    }
    scene.dimension = static_cast<int>(scene.polytope[0].size());
    if (doc.contains("dimension") &&
        detail::json_integer(doc["dimension"], "dimension") != scene.dimension)
        throw SemanticError("'dimension' disagrees with the polytope rows");
    for (const auto& v : scene.polytope)
        if (static_cast<int>(v.size()) != scene.dimension)
            throw SemanticError("polytope rows have inconsistent dimensions");

    if (doc.contains("subspace")) {
        if (!doc["subspace"].is_array()) throw SemanticError("'subspace' must be an array");
        std::vector<IntVec> rows;
        for (const auto& row : doc["subspace"]) {
            if (!row.is_array()) throw SemanticError("subspace rows must be arrays");
            IntVec p;
            for (const auto& entry : row) p.push_back(detail::json_integer(entry, "subspace"));
            if (static_cast<int>(p.size()) != scene.dimension)
                throw SemanticError("subspace rows must have the polytope's dimension");
            rows.push_back(std::move(p));
        }
        scene.subspace = std::move(rows);
    }

    scene.offset_exp.assign(scene.dimension, Rat(1));
    if (doc.contains("offset_exp")) {
        if (!doc["offset_exp"].is_array() ||
            static_cast<int>(doc["offset_exp"].size()) != scene.dimension)
            throw SemanticError("'offset_exp' must list one positive rational per dimension");
        for (int i = 0; i < scene.dimension; ++i)
            scene.offset_exp[i] = detail::json_rational(doc["offset_exp"][i], "offset_exp");
    }
    for (int i = 0; i < scene.dimension; ++i)
        if (scene.offset_exp[i] <= 0)
            throw SemanticError("'offset_exp' entries must be positive");

    if (doc.contains("options")) {
        const auto& opts = doc["options"];
        if (!opts.is_object()) throw SemanticError("'options' must be an object");
        if (opts.contains("samples"))
            scene.options.samples = static_cast<int>(to_long(detail::json_integer(opts["samples"], "options.samples")));
        if (opts.contains("box"))
            scene.options.box = static_cast<int>(to_long(detail::json_integer(opts["box"], "options.box")));
        if (opts.contains("tolerance")) {
            if (!opts["tolerance"].is_number())
                throw SemanticError("options.tolerance must be a number");
            scene.options.tolerance = opts["tolerance"].get<double>();
        }
        if (scene.options.samples <= 0 || scene.options.box <= 0 ||
            scene.options.tolerance <= 0)
            throw SemanticError("options must be positive");
    }
    return scene;
}

}  // namespace toric
