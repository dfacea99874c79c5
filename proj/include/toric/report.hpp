#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/moment.hpp"

namespace toric {

inline std::string vec_to_string(const RatVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

inline std::string vec_to_string(const IntVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

inline std::string monomial_to_string(const IntVec& s, bool positive_part) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        Int e = positive_part ? s[i] : Int(-s[i]);
        if (e <= 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(i + 1);
        if (e > 1) out += "^" + e.str();
    }
    return out.empty() ? "1" : out;
}

inline std::string equation_to_string(const BinomialEquation& eq) {
    std::string plus = monomial_to_string(eq.s, true);
    std::string minus = monomial_to_string(eq.s, false);
    if (eq.c == 1) return plus + " - " + minus;
    std::string coeff =
        rat_den(eq.c) == 1 ? rat_num(eq.c).str() : "(" + rat_to_string(eq.c) + ")";
    if (minus == "1") return plus + " - " + coeff;
    return plus + " - " + coeff + "*" + minus;
}

inline std::string stratum_to_string(uint32_t mask, int n) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

// ---- machine-readable section -------------------------------------------

inline nlohmann::json rat_json(const Rat& r) { return rat_to_string(r); }

inline nlohmann::json vec_json(const RatVec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(rat_json(x));
    return arr;
}

inline nlohmann::json vec_json(const IntVec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline nlohmann::json equations_json(const ChartAtlas& atlas, const AffineSubtorus& v) {
    nlohmann::json charts = nlohmann::json::array();
    for (int chart = 0; chart < atlas.size(); ++chart) {
        nlohmann::json entry;
        entry["chart"] = chart;
        entry["vertex"] = vec_json(atlas.vertices[chart]);
        nlohmann::json items = nlohmann::json::array();
        for (const auto& eq : defining_equations(atlas, v, chart)) {
            nlohmann::json item;
            item["j"] = eq.j;
            item["exponents"] = vec_json(eq.s);
            item["coefficient"] = rat_json(eq.c);
            items.push_back(std::move(item));
        }
        entry["equations"] = std::move(items);
        charts.push_back(std::move(entry));
    }
    return charts;
}

/// Equation data re-read from the machine section; the round trip through
/// this parser must reproduce the emitted exponents and coefficients.
struct MachineEquations {
    struct Chart {
        int chart = 0;
        RatVec vertex;
        std::vector<BinomialEquation> equations;
    };
    std::vector<Chart> charts;
};

inline MachineEquations parse_equations_json(const nlohmann::json& doc) {
    MachineEquations out;
    for (const auto& entry : doc) {
        MachineEquations::Chart chart;
        chart.chart = entry.at("chart").get<int>();
        for (const auto& x : entry.at("vertex")) chart.vertex.push_back(parse_rational(x.get<std::string>()));
        for (const auto& item : entry.at("equations")) {
            BinomialEquation eq;
            eq.chart = chart.chart;
            eq.j = item.at("j").get<int>();
            for (const auto& x : item.at("exponents")) eq.s.push_back(Int(x.get<std::string>()));
            eq.c = parse_rational(item.at("coefficient").get<std::string>());
            chart.equations.push_back(std::move(eq));
        }
        out.charts.push_back(std::move(chart));
    }
    return out;
}

inline nlohmann::json smoothness_json(const SmoothnessReport& report, const ChartAtlas& atlas) {
    nlohmann::json out;
    out["verdict"] = report.smooth() ? "SMOOTH" : "SINGULAR";
    out["expected_rank"] = report.expected_rank;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
        nlohmann::json jw;
        jw["chart"] = w.chart;
        jw["vertex"] = vec_json(atlas.vertices[w.chart]);
        jw["support"] = stratum_to_string(w.mask, atlas.n);
        jw["point"] = vec_json(w.point);
        jw["rank"] = w.rank;
        witnesses.push_back(std::move(jw));
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

inline nlohmann::json moment_json(const MomentImage& mi, const ChartAtlas& atlas) {
    nlohmann::json out;
    out["ambient_dim"] = mi.projected.ambient_dim;
    nlohmann::json hull = nlohmann::json::array();
    for (const auto& h : mi.projected.hull) hull.push_back(vec_json(h));
    out["hull_vertices"] = std::move(hull);
    nlohmann::json verts = nlohmann::json::array();
    for (size_t i = 0; i < mi.status.size(); ++i) {
        nlohmann::json entry;
        entry["vertex"] = vec_json(atlas.vertices[i]);
        entry["image"] = vec_json(mi.projected.images[i].second);
        entry["status"] =
            mi.status[i] == VertexStatus::Vertex ? "VERTEX_WITH_FIXED_POINT" : "NON_VERTEX";
        if (mi.certificates[i]) {
            entry["fixed_point"] = vec_json(mi.certificates[i]->point);
            entry["certified"] = mi.certificates[i]->verified();
        }
        verts.push_back(std::move(entry));
    }
    out["vertices"] = std::move(verts);
    out["theorem_check"] = mi.theorem_check;
    out["unchecked_mode"] = mi.unchecked_mode;
    return out;
}

// ---- human-readable section ---------------------------------------------

inline std::string delzant_text(const DelzantResult& result) {
    std::ostringstream os;
    if (result.ok()) {
        const auto& p = *result.polytope;
        os << "polytope OK: " << p.vertices.size() << " vertices, " << p.facets.size()
           << " facets, dimension " << p.n << "\n";
        for (size_t i = 0; i < p.vertices.size(); ++i) {
            os << "  vertex " << i << " " << vec_to_string(p.vertices[i]) << ": edges";
            for (const auto& d : p.edge_dirs[i]) os << " " << vec_to_string(d);
            os << "\n";
        }
    } else {
        os << "polytope FAILED verification:\n";
        for (const auto& v : result.violations)
            os << "  vertex " << vec_to_string(v.vertex) << ": '" << v.condition
               << "' violated (" << v.detail << ")\n";
    }
    return os.str();
}

inline std::string equations_text(const ChartAtlas& atlas, const AffineSubtorus& v) {
    std::ostringstream os;
    for (int chart = 0; chart < atlas.size(); ++chart) {
        os << "chart " << chart << " at " << vec_to_string(atlas.vertices[chart]) << ":\n";
        for (const auto& eq : defining_equations(atlas, v, chart))
            os << "  f_" << eq.j << " = " << equation_to_string(eq) << "\n";
    }
    return os.str();
}

inline std::string smoothness_text(const SmoothnessReport& report, const ChartAtlas& atlas) {
    std::ostringstream os;
    os << "verdict: " << (report.smooth() ? "SMOOTH" : "SINGULAR") << " (expected rank "
       << report.expected_rank << ")\n";
    for (const auto& w : report.witnesses)
        os << "  witness: chart " << w.chart << " at " << vec_to_string(atlas.vertices[w.chart])
           << ", support " << stratum_to_string(w.mask, atlas.n) << ", point "
           << vec_to_string(w.point) << ", rank " << w.rank << "\n";
    return os.str();
}

/// Aggregated analysis of one scene. Only the sections a command asked
/// for are present; text() and machine() are deterministic functions of
/// the scene, with timing kept out of the rendered body.
struct AnalysisReport {
    DelzantResult delzant;
    std::optional<ChartAtlas> atlas;
    std::optional<AffineSubtorus> subtorus;
    bool with_equations = false;
    std::optional<SmoothnessReport> smoothness;
    std::optional<MomentImage> moment;
    double elapsed_ms = 0.0;

    std::string text() const;
    nlohmann::json machine() const;
};

inline std::string moment_text(const MomentImage& mi, const ChartAtlas& atlas) {
    std::ostringstream os;
    os << "projected polytope in dimension " << mi.projected.ambient_dim << "\n";
    os << "hull vertices:";
    for (const auto& h : mi.projected.hull) os << " " << vec_to_string(h);
    os << "\n";
    for (size_t i = 0; i < mi.status.size(); ++i) {
        os << "  vertex " << vec_to_string(atlas.vertices[i]) << " -> "
           << vec_to_string(mi.projected.images[i].second) << ": "
           << (mi.status[i] == VertexStatus::Vertex ? "VERTEX_WITH_FIXED_POINT" : "NON_VERTEX");
        if (mi.certificates[i])
            os << ", fixed point " << vec_to_string(mi.certificates[i]->point)
               << (mi.certificates[i]->verified() ? " (certified)" : " (NOT verified)");
        os << "\n";
    }
    os << "theorem check (hull vertices = certified images): "
       << (mi.theorem_check ? "PASS" : "FAIL") << "\n";
    if (mi.unchecked_mode)
        os << "note: computed in unchecked mode; the smoothness hypothesis was not assumed\n";
    return os.str();
}

inline std::string AnalysisReport::text() const {
    std::string out = delzant_text(delzant);
    if (atlas && subtorus && with_equations) out += equations_text(*atlas, *subtorus);
    if (atlas && smoothness) out += smoothness_text(*smoothness, *atlas);
    if (atlas && moment) out += moment_text(*moment, *atlas);
    return out;
}

inline nlohmann::json AnalysisReport::machine() const {
    nlohmann::json out;
    out["polytope_ok"] = delzant.ok();
    if (atlas && subtorus && with_equations) out["equations"] = equations_json(*atlas, *subtorus);
    if (atlas && smoothness) out["smoothness"] = smoothness_json(*smoothness, *atlas);
    if (atlas && moment) out["moment"] = moment_json(*moment, *atlas);
    return out;
}

}  // namespace toric
