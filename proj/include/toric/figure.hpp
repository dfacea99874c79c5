#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "toric/subtorus.hpp"

namespace toric {

/// Lattice-point weighted average standing in for the moment map when
/// drawing figures: mu(w) = sum_m m |w^m|^2 / sum_m |w^m|^2 over the
/// integer points of the polytope. Its image lies in the interior of the
/// polytope and the weights are evaluated in log space so large cylinder
/// coordinates cannot overflow.
inline std::array<double, 2> algebraic_moment(const std::vector<IntVec>& lattice,
                                              const std::vector<double>& log_abs_w) {
    double max_log = -1e300;
    std::vector<double> logs(lattice.size());
    for (size_t m = 0; m < lattice.size(); ++m) {
        double lw = 0.0;
        for (size_t i = 0; i < log_abs_w.size(); ++i)
            lw += 2.0 * static_cast<double>(to_long(lattice[m][i])) * log_abs_w[i];
        logs[m] = lw;
        max_log = std::max(max_log, lw);
    }
    double total = 0.0;
    std::array<double, 2> acc{0.0, 0.0};
    for (size_t m = 0; m < lattice.size(); ++m) {
        double weight = std::exp(logs[m] - max_log);
        total += weight;
        acc[0] += weight * static_cast<double>(to_long(lattice[m][0]));
        acc[1] += weight * static_cast<double>(to_long(lattice[m][1]));
    }
    return {acc[0] / total, acc[1] / total};
}

namespace detail {

inline std::vector<double> log_abs_point(const AffineSubtorus& v, const std::vector<double>& u) {
    std::vector<double> logs(v.n);
    for (int i = 0; i < v.n; ++i) {
        double acc = std::log(to_double(v.E[i]));
        for (int l = 0; l < v.k; ++l) acc += static_cast<double>(to_long(v.p[l][i])) * u[l];
        logs[i] = acc;
    }
    return logs;
}

/// Cylinder radius at which the sampled curve stops moving: doubled until
/// the axis-extreme images stabilize. The image only depends on the real
/// cylinder coordinates, so the angular slices need no extra samples.
inline double stable_radius(const std::vector<IntVec>& lattice, const AffineSubtorus& v) {
    if (v.k == 0) return 0.0;
    double radius = 4.0;
    std::vector<std::array<double, 2>> prev;
    while (radius < 64.0) {
        std::vector<std::array<double, 2>> extremes;
        for (int l = 0; l < v.k; ++l) {
            for (double sgn : {-1.0, 1.0}) {
                std::vector<double> u(v.k, 0.0);
                u[l] = sgn * radius;
                extremes.push_back(algebraic_moment(lattice, log_abs_point(v, u)));
            }
        }
        if (!prev.empty()) {
            double moved = 0.0;
            for (size_t i = 0; i < extremes.size(); ++i)
                moved = std::max(moved, std::hypot(extremes[i][0] - prev[i][0],
                                                   extremes[i][1] - prev[i][1]));
            if (moved < 1e-6) return radius;
        }
        prev = std::move(extremes);
        radius *= 2.0;
    }
    return radius;
}

}  // namespace detail

/// Sampled image curve of the subtorus under the figure surrogate, on a
/// grid of cylinder coordinates. Planar polytopes only.
inline std::vector<std::array<double, 2>> sample_moment_curve(const DelzantPolytope& poly,
                                                              const AffineSubtorus& v,
                                                              int samples) {
    if (poly.n != 2) throw DimensionUnsupported("figure sampling needs a planar polytope");
    auto lattice = lattice_points(poly);
    if (v.k == 0)
        return {algebraic_moment(lattice, detail::log_abs_point(v, {}))};

    double radius = detail::stable_radius(lattice, v);
    int per_axis = std::max(2, static_cast<int>(std::ceil(std::pow(
                                   static_cast<double>(samples), 1.0 / v.k))));
    std::vector<std::array<double, 2>> out;
    std::vector<int> idx(v.k, 0);
    while (true) {
        std::vector<double> u(v.k);
        for (int l = 0; l < v.k; ++l)
            u[l] = -radius + 2.0 * radius * idx[l] / (per_axis - 1);
        out.push_back(algebraic_moment(lattice, detail::log_abs_point(v, u)));
        int l = v.k - 1;
        while (l >= 0) {
            if (++idx[l] < per_axis) break;
            idx[l] = 0;
            --l;
        }
        if (l < 0) break;
    }
    return out;
}

/// Snaps a floating point to nearby rationals and tests membership with
/// the given slack on every facet inequality, exactly.
inline bool contains_rounded(const DelzantPolytope& poly, const std::array<double, 2>& pt,
                             const Rat& slack) {
    const Int scale = Int(1) << 48;
    RatVec x(2);
    for (int i = 0; i < 2; ++i)
        x[i] = Rat(Int(std::llround(pt[i] * static_cast<double>(scale))), scale);
    return poly.contains(x, slack);
}

namespace detail {

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", x + 0.0);  // normalize -0
    return buf;
}

/// Boundary cycle of a planar polytope, walking its edges.
inline std::vector<int> boundary_cycle(const DelzantPolytope& poly) {
    std::vector<int> cycle{0};
    std::vector<bool> used(poly.vertices.size(), false);
    used[0] = true;
    while (cycle.size() < poly.vertices.size()) {
        int cur = cycle.back();
        bool advanced = false;
        for (int nb : poly.neighbors[cur]) {
            if (used[nb]) continue;
            cycle.push_back(nb);
            used[nb] = true;
            advanced = true;
            break;
        }
        if (!advanced) break;
    }
    return cycle;
}

}  // namespace detail

/// Standalone SVG: the polytope outline plus the sampled curve, mapped
/// into a 500x500 view box with a 5% margin. Identical inputs produce
/// identical bytes.
inline std::string render_svg(const DelzantPolytope& poly,
                              const std::vector<std::array<double, 2>>& samples) {
    if (poly.n != 2) throw DimensionUnsupported("SVG output needs a planar polytope");
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& v : poly.vertices) {
        xmin = std::min(xmin, to_double(v[0]));
        xmax = std::max(xmax, to_double(v[0]));
        ymin = std::min(ymin, to_double(v[1]));
        ymax = std::max(ymax, to_double(v[1]));
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double scale = 450.0 / span;
    const double ox = 25.0 + (450.0 - scale * (xmax - xmin)) / 2.0;
    const double oy = 25.0 + (450.0 - scale * (ymax - ymin)) / 2.0;
    auto px = [&](double x) { return ox + scale * (x - xmin); };
    auto py = [&](double y) { return 475.0 - oy + 25.0 - scale * (y - ymin); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 500 500\" "
           "width=\"500\" height=\"500\">\n";
    svg += "  <polygon points=\"";
    auto cycle = detail::boundary_cycle(poly);
    for (size_t i = 0; i < cycle.size(); ++i) {
        if (i) svg += " ";
        const auto& v = poly.vertices[cycle[i]];
        svg += detail::fmt(px(to_double(v[0]))) + "," + detail::fmt(py(to_double(v[1])));
    }
    svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const auto& s : samples)
        svg += "  <circle cx=\"" + detail::fmt(px(s[0])) + "\" cy=\"" + detail::fmt(py(s[1])) +
               "\" r=\"1.8\" fill=\"crimson\"/>\n";
    svg += "</svg>\n";
    return svg;
}

inline void emit_svg(const DelzantPolytope& poly,
                     const std::vector<std::array<double, 2>>& samples,
                     const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out << render_svg(poly, samples);
    if (!out) throw IOError("failed writing '" + path + "'");
}

}  // namespace toric
