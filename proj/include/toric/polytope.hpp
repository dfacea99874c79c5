#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/lp.hpp"

namespace toric {

/// Supporting hyperplane <normal, x> >= offset with equality exactly on
/// the listed vertex indices. Normals are primitive integral and point
/// into the polytope.
struct Facet {
    IntVec normal;
    Rat offset;
    std::vector<int> on;
};

namespace detail {

inline void check_same_dimension(const std::vector<RatVec>& pts) {
    if (pts.empty()) throw DimensionMismatch("empty point list");
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw DimensionMismatch();
}

inline int affine_rank(const std::vector<RatVec>& pts) {
    if (pts.size() <= 1) return 0;
    const int n = static_cast<int>(pts[0].size());
    RatMat diffs(static_cast<int>(pts.size()) - 1, n);
    for (size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < n; ++j) diffs(static_cast<int>(i) - 1, j) = pts[i][j] - pts[0][j];
    return rational_rank(diffs);
}

/// Clears denominators and reduces; the input must be a nonzero rational
/// direction, which every edge of a rational-vertex polytope has.
inline IntVec integral_direction(const RatVec& d) {
    Int l = 1;
    for (const auto& x : d) l = boost::multiprecision::lcm(l, rat_den(x));
    IntVec v(d.size());
    bool zero = true;
    for (size_t i = 0; i < d.size(); ++i) {
        Rat scaled = d[i] * Rat(l);
        assert(rat_den(scaled) == 1);
        v[i] = rat_num(scaled);
        if (v[i] != 0) zero = false;
    }
    if (zero) throw NonRationalDirection();
    return primitive_part(v);
}

}  // namespace detail

/// Minimal subset of `points` with the same convex hull, sorted
/// lexicographically. Works in any dimension, including point sets whose
/// hull is not full-dimensional.
inline std::vector<RatVec> hull_vertices(const std::vector<RatVec>& points) {
    detail::check_same_dimension(points);
    std::vector<RatVec> uniq = points;
    std::sort(uniq.begin(), uniq.end(), lex_less<RatVec>);
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() == 1) return uniq;
    std::vector<RatVec> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        std::vector<RatVec> others;
        others.reserve(uniq.size() - 1);
        for (size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(uniq[j]);
        if (!in_convex_hull(others, uniq[i])) out.push_back(uniq[i]);
    }
    return out;
}

/// All facets of a full-dimensional polytope given by its vertex set.
/// Every (n-1)-dimensional subset of n vertices proposes a hyperplane;
/// the one-sided ones are facets. Quadratic-ish but exact, which is all
/// the desk-scale inputs here need.
inline std::vector<Facet> facet_enumeration(const std::vector<RatVec>& verts) {
    detail::check_same_dimension(verts);
    const int n = static_cast<int>(verts[0].size());
    const int s = static_cast<int>(verts.size());
    std::vector<Facet> facets;
    std::map<std::pair<IntVec, Rat>, bool> seen;

    // iterate over all n-subsets of vertex indices
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    auto advance = [&]() -> bool {
        int i = n - 1;
        while (i >= 0 && comb[i] == s - n + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (n > s) return facets;

    do {
        // affine span of the chosen vertices must be a hyperplane
        RatMat diffs(n - 1, n);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                diffs(i - 1, j) = verts[comb[i]][j] - verts[comb[0]][j];
        if (n > 1 && rational_rank(diffs) != n - 1) continue;
        auto kernel = rational_kernel_basis(diffs);
        if (kernel.size() != 1) continue;
        IntVec normal = detail::integral_direction(kernel[0]);
        Rat offset = dot(normal, verts[comb[0]]);
        int below = 0, above = 0;
        for (int v = 0; v < s; ++v) {
            Rat val = dot(normal, verts[v]) - offset;
            if (val > 0) ++above;
            if (val < 0) ++below;
        }
        if (above > 0 && below > 0) continue;  // not supporting
        if (below > 0) {
            normal = negated(std::move(normal));
            offset = -offset;
        }
        auto key = std::make_pair(normal, offset);
        if (seen.count(key)) continue;
        seen[key] = true;
        Facet f;
        f.normal = std::move(normal);
        f.offset = offset;
        for (int v = 0; v < s; ++v)
            if (dot(f.normal, verts[v]) == f.offset) f.on.push_back(v);
        facets.push_back(std::move(f));
    } while (advance());

    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
        if (x.normal != y.normal) return lex_less(x.normal, y.normal);
        return x.offset < y.offset;
    });
    return facets;
}

struct Violation {
    int vertex_index = -1;
    RatVec vertex;
    std::string condition;  // "simple" | "rational" | "smooth"
    std::string detail;
};

/// A verified polytope: simple, rational, and with unimodular edge frames.
/// Per-vertex edge directions are stored in canonical order (sorted
/// lexicographically, last two swapped if needed) so det[v_1 ... v_n] = +1,
/// and the normals are the rows of the inverse frame, giving
/// <u_i, v_j> = delta_ij.
struct DelzantPolytope {
    int n = 0;
    std::vector<RatVec> vertices;                // lexicographic order
    std::vector<Facet> facets;
    std::vector<std::vector<IntVec>> edge_dirs;  // per vertex
    std::vector<std::vector<IntVec>> normals;    // per vertex
    std::vector<std::vector<int>> neighbors;     // per vertex, aligned with edge_dirs

    int vertex_index(const RatVec& v) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        throw NotAVertex();
    }

    /// Exact membership, optionally relaxed by a nonnegative slack on each
    /// facet inequality.
    bool contains(const RatVec& x, const Rat& slack = Rat(0)) const {
        for (const auto& f : facets)
            if (dot(f.normal, x) < f.offset - slack) return false;
        return true;
    }
};

struct DelzantResult {
    std::optional<DelzantPolytope> polytope;
    std::vector<Violation> violations;
    bool ok() const { return polytope.has_value(); }
};

namespace detail {

/// Raw primitive edge directions at vertex `vi`, sorted lexicographically,
/// together with the neighbor each edge leads to. Two vertices form an
/// edge when the facets containing both have normals of rank n-1.
inline std::pair<std::vector<IntVec>, std::vector<int>> edges_at_vertex(
    const std::vector<RatVec>& verts, const std::vector<Facet>& facets, int vi) {
    const int n = static_cast<int>(verts[0].size());
    std::vector<std::pair<IntVec, int>> found;
    for (int vj = 0; vj < static_cast<int>(verts.size()); ++vj) {
        if (vj == vi) continue;
        std::vector<IntVec> shared;
        for (const auto& f : facets) {
            bool has_i = std::find(f.on.begin(), f.on.end(), vi) != f.on.end();
            bool has_j = std::find(f.on.begin(), f.on.end(), vj) != f.on.end();
            if (has_i && has_j) shared.push_back(f.normal);
        }
        if (rational_rank(shared) != n - 1) continue;
        RatVec d(n);
        for (int c = 0; c < n; ++c) d[c] = verts[vj][c] - verts[vi][c];
        found.emplace_back(integral_direction(d), vj);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    std::vector<IntVec> dirs;
    std::vector<int> nbrs;
    for (auto& [d, j] : found) {
        dirs.push_back(std::move(d));
        nbrs.push_back(j);
    }
    return {dirs, nbrs};
}

}  // namespace detail

/// Primitive integral directions of the edges incident to `v`, sorted
/// lexicographically. The count may differ from n on non-simple inputs.
inline std::vector<IntVec> vertex_edge_directions(const std::vector<RatVec>& points,
                                                  const RatVec& v) {
    auto verts = hull_vertices(points);
    int vi = -1;
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == v) vi = static_cast<int>(i);
    if (vi < 0) throw NotAVertex();
    auto facets = facet_enumeration(verts);
    return detail::edges_at_vertex(verts, facets, vi).first;
}

/// Checks the three polytope conditions vertex by vertex and, on success,
/// returns the fully populated structure. A failed vertex is reported with
/// the violated condition; remaining vertices are still examined.
inline DelzantResult verify_delzant(const std::vector<RatVec>& points) {
    auto verts = hull_vertices(points);
    const int n = static_cast<int>(verts[0].size());
    // below dimension two the +1 frame convention cannot be met by renumbering
    if (n < 2) throw DimensionMismatch("polytope verification needs ambient dimension >= 2");
    if (static_cast<int>(verts.size()) < n + 1 || detail::affine_rank(verts) != n)
        throw NotFullDimensional();

    DelzantResult result;
    DelzantPolytope poly;
    poly.n = n;
    poly.vertices = verts;
    poly.facets = facet_enumeration(verts);
    poly.edge_dirs.resize(verts.size());
    poly.normals.resize(verts.size());
    poly.neighbors.resize(verts.size());

    for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
        auto [dirs, nbrs] = detail::edges_at_vertex(verts, poly.facets, vi);
        if (static_cast<int>(dirs.size()) != n) {
            result.violations.push_back({vi, verts[vi], "simple",
                                         "vertex has " + std::to_string(dirs.size()) +
                                             " edges, expected " + std::to_string(n)});
            continue;
        }
        Int det = determinant(IntMat::from_columns(dirs));
        if (det != 1 && det != -1) {
            result.violations.push_back(
                {vi, verts[vi], "smooth",
                 "edge directions are not a lattice basis (det = " + det.str() + ")"});
            continue;
        }
        if (det == -1) {
            std::swap(dirs[n - 2], dirs[n - 1]);
            std::swap(nbrs[n - 2], nbrs[n - 1]);
        }
        IntMat frame = IntMat::from_columns(dirs);
        IntMat inv = unimodular_inverse(frame);
        poly.edge_dirs[vi] = std::move(dirs);
        poly.neighbors[vi] = std::move(nbrs);
        poly.normals[vi].reserve(n);
        for (int i = 0; i < n; ++i) poly.normals[vi].push_back(inv.row(i));
    }

    if (result.violations.empty()) result.polytope = std::move(poly);
    return result;
}

/// Rows of the inverse frame: the unique vectors with <u_i, v_j> = delta_ij.
inline std::vector<IntVec> facet_normals_at_vertex(const IntMat& frame) {
    IntMat inv = unimodular_inverse(frame);
    std::vector<IntVec> normals;
    normals.reserve(frame.rows);
    for (int i = 0; i < frame.rows; ++i) normals.push_back(inv.row(i));
    return normals;
}

/// True when the only nonnegative combination of the generators equal to
/// zero is the trivial one; decided by exact feasibility of
/// {r >= 0, sum r_i v_i = 0, sum r_i = 1}.
inline bool cone_is_pointed(const std::vector<IntVec>& generators) {
    if (generators.empty()) return true;
    const int n = static_cast<int>(generators[0].size());
    const int s = static_cast<int>(generators.size());
    RatMat A(n + 1, s);
    RatVec b(n + 1, Rat(0));
    for (int j = 0; j < s; ++j) {
        assert(static_cast<int>(generators[j].size()) == n);
        for (int i = 0; i < n; ++i) A(i, j) = Rat(generators[j][i]);
        A(n, j) = 1;
    }
    b[n] = 1;
    return !lp_feasible(A, b);
}

struct ProjectedPolytope {
    int ambient_dim = 0;                          // k
    std::vector<std::pair<int, RatVec>> images;   // vertex index -> image
    std::vector<RatVec> hull;                     // extreme points, lex order
};

/// Image of the polytope under an integral linear map with full row rank;
/// the image of a polytope is again a polytope, generated by the images
/// of the vertices.
inline ProjectedPolytope project_polytope(const DelzantPolytope& poly, const IntMat& map) {
    assert(map.cols == poly.n);
    if (rational_rank(RatMat::from_int(map)) != map.rows) throw RankDeficient();
    ProjectedPolytope out;
    out.ambient_dim = map.rows;
    std::vector<RatVec> pts;
    for (size_t vi = 0; vi < poly.vertices.size(); ++vi) {
        RatVec img(map.rows, Rat(0));
        for (int i = 0; i < map.rows; ++i)
            for (int j = 0; j < map.cols; ++j) img[i] += Rat(map(i, j)) * poly.vertices[vi][j];
        pts.push_back(img);
        out.images.emplace_back(static_cast<int>(vi), std::move(img));
    }
    if (map.rows == 0)
        out.hull = {RatVec{}};
    else
        out.hull = hull_vertices(pts);
    return out;
}

/// All integer points of conv(points): bounding-box scan with an exact
/// hull-membership test per candidate. Handles degenerate hulls.
inline std::vector<IntVec> lattice_points(const std::vector<RatVec>& points) {
    detail::check_same_dimension(points);
    const int n = static_cast<int>(points[0].size());
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Rat mn = points[0][j], mx = points[0][j];
        for (const auto& p : points) {
            mn = std::min(mn, p[j]);
            mx = std::max(mx, p[j]);
        }
        lo[j] = rat_ceil(mn);
        hi[j] = rat_floor(mx);
    }
    std::vector<IntVec> found;
    IntVec cur = lo;
    if (n == 0) return {IntVec{}};
    while (true) {
        RatVec x(n);
        for (int j = 0; j < n; ++j) x[j] = Rat(cur[j]);
        if (in_convex_hull(points, x)) found.push_back(cur);
        int j = n - 1;
        while (j >= 0) {
            if (cur[j] < hi[j]) { ++cur[j]; break; }
            cur[j] = lo[j];
            --j;
        }
        if (j < 0) break;
    }
    std::sort(found.begin(), found.end(), lex_less<IntVec>);
    return found;
}

inline std::vector<IntVec> lattice_points(const DelzantPolytope& poly) {
    return lattice_points(poly.vertices);
}

}  // namespace toric
