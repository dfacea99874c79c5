#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

using CVec = std::vector<std::complex<double>>;

/// One coordinate chart per vertex. Q holds the canonical edge frame
/// (det +1) as columns, Qinv its exact integer inverse.
struct ChartAtlas {
    int n = 0;
    std::vector<RatVec> vertices;
    std::vector<IntMat> Q;
    std::vector<IntMat> Qinv;

    int size() const { return static_cast<int>(vertices.size()); }

    void check_label(int chart) const {
        if (chart < 0 || chart >= size()) throw UnknownLabel();
    }

    IntVec edge_direction(int chart, int i) const { return Q[chart].col(i); }
    IntVec normal(int chart, int i) const { return Qinv[chart].row(i); }
};

inline ChartAtlas build_atlas(const DelzantPolytope& poly) {
    ChartAtlas atlas;
    atlas.n = poly.n;
    atlas.vertices = poly.vertices;
    for (size_t v = 0; v < poly.vertices.size(); ++v) {
        atlas.Q.push_back(IntMat::from_columns(poly.edge_dirs[v]));
        atlas.Qinv.push_back(IntMat::from_rows(poly.normals[v]));
    }
    return atlas;
}

struct TransitionMatrix {
    int src = 0, dst = 0;
    IntMat D;  // (Q_src)^{-1} Q_dst
};

inline TransitionMatrix transition(const ChartAtlas& atlas, int src, int dst) {
    atlas.check_label(src);
    atlas.check_label(dst);
    return {src, dst, mul(atlas.Qinv[src], atlas.Q[dst])};
}

/// A point needs nonzero j-th coordinate whenever row j of D carries a
/// negative exponent.
template <class Scalar>
bool in_transition_domain(const TransitionMatrix& t, const std::vector<Scalar>& z) {
    assert(static_cast<int>(z.size()) == t.D.rows);
    for (int j = 0; j < t.D.rows; ++j) {
        bool negative = false;
        for (int l = 0; l < t.D.cols; ++l)
            if (t.D(j, l) < 0) { negative = true; break; }
        if (negative && scalar_is_zero(z[j])) return false;
    }
    return true;
}

namespace detail {

/// prod_j z_j^{e_j} with the conventions 0^0 = 1 and 0^positive = 0;
/// a zero base under a negative exponent is the caller's error.
template <class Scalar, class ExpAt>
Scalar monomial_value(const std::vector<Scalar>& z, ExpAt exponent) {
    Scalar acc = scalar_one<Scalar>();
    bool vanishes = false;
    for (size_t j = 0; j < z.size(); ++j) {
        Int e = exponent(static_cast<int>(j));
        if (e == 0) continue;
        if (scalar_is_zero(z[j])) {
            if (e < 0) throw DomainViolation();
            vanishes = true;
            continue;
        }
        acc *= scalar_pow(z[j], e);
    }
    if (vanishes) return Scalar(0);
    return acc;
}

}  // namespace detail

/// Monomial coordinate change z'_i = prod_j z_j^{D_ji}.
template <class Scalar>
std::vector<Scalar> transform_point(const TransitionMatrix& t, const std::vector<Scalar>& z) {
    if (!in_transition_domain(t, z)) throw DomainViolation();
    std::vector<Scalar> out(t.D.cols);
    for (int i = 0; i < t.D.cols; ++i)
        out[i] = detail::monomial_value(z, [&](int j) { return t.D(j, i); });
    return out;
}

/// Chart coordinates to torus coordinates, w_i = prod_j z_j^{(Q^{-1})_ji}.
/// Independent of the chart when composed with the chart identifications.
template <class Scalar>
std::vector<Scalar> chart_to_torus(const ChartAtlas& atlas, int chart,
                                   const std::vector<Scalar>& z) {
    atlas.check_label(chart);
    assert(static_cast<int>(z.size()) == atlas.n);
    for (const auto& c : z)
        if (scalar_is_zero(c)) throw ZeroCoordinate();
    const IntMat& m = atlas.Qinv[chart];
    std::vector<Scalar> out(atlas.n);
    for (int i = 0; i < atlas.n; ++i)
        out[i] = detail::monomial_value(z, [&](int j) { return m(j, i); });
    return out;
}

/// Inverse of chart_to_torus, z_i = prod_j w_j^{Q_ji}.
template <class Scalar>
std::vector<Scalar> torus_to_chart(const ChartAtlas& atlas, int chart,
                                   const std::vector<Scalar>& w) {
    atlas.check_label(chart);
    assert(static_cast<int>(w.size()) == atlas.n);
    for (const auto& c : w)
        if (scalar_is_zero(c)) throw ZeroCoordinate();
    const IntMat& m = atlas.Q[chart];
    std::vector<Scalar> out(atlas.n);
    for (int i = 0; i < atlas.n; ++i)
        out[i] = detail::monomial_value(w, [&](int j) { return m(j, i); });
    return out;
}

/// A labeled point in one chart; rational coordinates when the point is an
/// exact witness, complex otherwise.
struct ChartPoint {
    int chart = 0;
    std::variant<RatVec, CVec> z;
};

}  // namespace toric
