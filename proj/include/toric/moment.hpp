#pragma once

#include <optional>
#include <vector>

#include "toric/smoothness.hpp"

namespace toric {

/// Fixed locus of the subtorus action in one chart: exactly the stratum
/// supported on J, the coordinates whose edge directions pair to zero
/// with every spanning vector.
inline Stratum fixed_stratum(int chart, const IndexProfile& profile, int n) {
    Stratum st{chart, 0, n};
    for (int i : profile.J) st.mask |= 1u << i;
    return st;
}

/// When some equation has strictly one-signed pairings over all
/// coordinates, its zero set avoids every coordinate hyperplane, so the
/// chart contains no fixed point of the action. Meaningful for k >= 1.
inline bool no_fixed_point_check(const std::vector<BinomialEquation>& eqs) {
    for (const auto& eq : eqs) {
        bool all_pos = true, all_neg = true;
        for (const auto& s : eq.s) {
            if (s <= 0) all_pos = false;
            if (s >= 0) all_neg = false;
        }
        if (all_pos || all_neg) return true;
    }
    return false;
}

enum class StarTag { Cond1, Cond2, Neither };

/// Per-equation dichotomy of the pairings <u_i, q_j> over i outside J:
/// all zero (Cond1), or a mixed-sign witness pair (Cond2). At projected
/// vertices one of the two always holds; Neither certifies a non-vertex.
struct StarClassification {
    int chart = 0;
    std::vector<StarTag> tags;
    std::vector<std::pair<int, int>> witness;  // (-1,-1) unless Cond2
};

inline StarClassification star_classification(const ChartAtlas& atlas, const AffineSubtorus& v,
                                              int chart) {
    auto profile = index_profile(atlas, v, chart);
    std::vector<bool> in_J(atlas.n, false);
    for (int i : profile.J) in_J[i] = true;

    StarClassification out;
    out.chart = chart;
    for (const auto& qj : v.q) {
        std::vector<Int> pairings(atlas.n);
        for (int i = 0; i < atlas.n; ++i) pairings[i] = dot(atlas.normal(chart, i), qj);
        bool all_zero = true;
        int pos = -1, neg = -1;
        for (int i = 0; i < atlas.n; ++i) {
            if (in_J[i]) continue;
            if (pairings[i] != 0) all_zero = false;
            if (pairings[i] > 0 && pos < 0) pos = i;
            if (pairings[i] < 0 && neg < 0) neg = i;
        }
        if (all_zero) {
            out.tags.push_back(StarTag::Cond1);
            out.witness.emplace_back(-1, -1);
        } else if (pos >= 0 && neg >= 0) {
            out.tags.push_back(StarTag::Cond2);
            out.witness.emplace_back(std::min(pos, neg), std::max(pos, neg));
        } else {
            out.tags.push_back(StarTag::Neither);
            out.witness.emplace_back(-1, -1);
        }
    }
    return out;
}

enum class VertexStatus { Vertex, NonVertex };

/// A vertex image stays a vertex of the projected polytope exactly when
/// the projected edge cone is pointed; zero images never affect
/// pointedness and are dropped before the feasibility test.
inline VertexStatus vertex_status(const ChartAtlas& atlas, const AffineSubtorus& v, int chart) {
    atlas.check_label(chart);
    std::vector<IntVec> generators;
    for (int i = 0; i < atlas.n; ++i) {
        IntVec dir = atlas.edge_direction(chart, i);
        IntVec image(v.k);
        for (int l = 0; l < v.k; ++l) image[l] = dot(v.p[l], dir);
        if (!is_zero(image)) generators.push_back(std::move(image));
    }
    return cone_is_pointed(generators) ? VertexStatus::Vertex : VertexStatus::NonVertex;
}

struct FixedPointCertificate {
    int chart = 0;
    RatVec point;            // offset surrogate on J, zero elsewhere
    bool equations_vanish = false;
    bool in_fixed_stratum = false;

    bool verified() const { return equations_vanish && in_fixed_stratum; }
};

/// The canonical fixed point of a chart whose image is a projected
/// vertex; its membership in the locus is verified in exact arithmetic.
inline FixedPointCertificate canonical_fixed_point(const ChartAtlas& atlas,
                                                   const AffineSubtorus& v, int chart) {
    if (vertex_status(atlas, v, chart) != VertexStatus::Vertex) throw NotAVertexImage();
    auto profile = index_profile(atlas, v, chart);
    std::vector<bool> in_J(atlas.n, false);
    for (int i : profile.J) in_J[i] = true;

    FixedPointCertificate cert;
    cert.chart = chart;
    cert.point.assign(atlas.n, Rat(0));
    for (int i = 0; i < atlas.n; ++i)
        if (in_J[i]) cert.point[i] = v.offset_pairing(atlas.edge_direction(chart, i));

    cert.equations_vanish = true;
    for (const auto& eq : defining_equations(atlas, v, chart))
        if (evaluate_equation(eq, cert.point) != 0) cert.equations_vanish = false;
    cert.in_fixed_stratum = true;
    for (int i = 0; i < atlas.n; ++i)
        if (!in_J[i] && cert.point[i] != 0) cert.in_fixed_stratum = false;
    return cert;
}

/// The face spanned from a vertex by its J-directions maps to a single
/// point under the pullback; verified exactly on the face's vertex set.
inline bool face_collapse_check(const DelzantPolytope& poly, const ChartAtlas& atlas,
                                const AffineSubtorus& v, int chart) {
    atlas.check_label(chart);
    auto profile = index_profile(atlas, v, chart);
    if (profile.J.empty()) return true;
    const RatVec& base = poly.vertices[chart];
    IntMat pm = pullback_matrix(v);

    RatVec base_image(v.k, Rat(0));
    for (int l = 0; l < v.k; ++l)
        for (int i = 0; i < poly.n; ++i) base_image[l] += Rat(pm(l, i)) * base[i];

    RatMat cols(poly.n, static_cast<int>(profile.J.size()));
    for (size_t t = 0; t < profile.J.size(); ++t) {
        IntVec dir = atlas.edge_direction(chart, profile.J[t]);
        for (int i = 0; i < poly.n; ++i) cols(i, static_cast<int>(t)) = Rat(dir[i]);
    }

    for (const auto& vert : poly.vertices) {
        RatVec rhs(poly.n);
        for (int i = 0; i < poly.n; ++i) rhs[i] = vert[i] - base[i];
        auto alpha = solve_rational(cols, rhs);
        if (!alpha) continue;
        bool nonneg = true;
        for (const auto& a : *alpha)
            if (a < 0) { nonneg = false; break; }
        if (!nonneg) continue;
        for (int l = 0; l < v.k; ++l) {
            Rat img(0);
            for (int i = 0; i < poly.n; ++i) img += Rat(pm(l, i)) * vert[i];
            if (img != base_image[l]) return false;
        }
    }
    return true;
}

/// Exact residuals [<p_l, v_i>][<u_i, q_j>] per chart; all must vanish
/// because the frame and its inverse cancel between the two pairings.
inline std::vector<IntMat> orthogonality_residuals(const ChartAtlas& atlas,
                                                   const AffineSubtorus& v) {
    IntMat pm = pullback_matrix(v);
    IntMat qcols(v.n, static_cast<int>(v.q.size()));
    for (size_t j = 0; j < v.q.size(); ++j)
        for (int i = 0; i < v.n; ++i) qcols(i, static_cast<int>(j)) = v.q[j][i];
    std::vector<IntMat> out;
    for (int chart = 0; chart < atlas.size(); ++chart)
        out.push_back(mul(mul(pm, atlas.Q[chart]), mul(atlas.Qinv[chart], qcols)));
    return out;
}

struct MomentImage {
    ProjectedPolytope projected;
    std::vector<VertexStatus> status;                           // per vertex
    std::vector<std::optional<FixedPointCertificate>> certificates;
    bool theorem_check = false;  // hull vertices == certified vertex images
    bool unchecked_mode = false;
};

/// Projected polytope together with the fixed-point combinatorics: which
/// vertex images stay vertices, certificates for those, and the identity
/// between the projected hull and the certified images. In checked mode
/// the subtorus closure must be smooth first.
inline MomentImage moment_image(const DelzantPolytope& poly, const ChartAtlas& atlas,
                                const AffineSubtorus& v, bool checked = true) {
    if (checked && !classify(atlas, v).smooth()) throw NotSmooth();

    MomentImage out;
    out.unchecked_mode = !checked;
    out.projected = project_polytope(poly, pullback_matrix(v));

    std::vector<RatVec> certified_images;
    for (int chart = 0; chart < atlas.size(); ++chart) {
        VertexStatus st = vertex_status(atlas, v, chart);
        out.status.push_back(st);
        if (st == VertexStatus::Vertex) {
            out.certificates.push_back(canonical_fixed_point(atlas, v, chart));
            certified_images.push_back(out.projected.images[chart].second);
        } else {
            out.certificates.push_back(std::nullopt);
        }
    }

    std::sort(certified_images.begin(), certified_images.end(), lex_less<RatVec>);
    certified_images.erase(std::unique(certified_images.begin(), certified_images.end()),
                           certified_images.end());
    bool all_verified = true;
    for (const auto& cert : out.certificates)
        if (cert && !cert->verified()) all_verified = false;
    out.theorem_check = all_verified && certified_images == out.projected.hull;
    return out;
}

}  // namespace toric
