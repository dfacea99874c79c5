#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "toric/charts.hpp"

namespace toric {

/// An affine subtorus datum: k primitive independent spanning vectors,
/// a positive rational offset stored componentwise-exponentiated
/// (E_i stands for e^{a_i}), and the derived saturated orthogonal basis.
/// Keeping the offset as E makes every coefficient below an exact
/// rational monomial.
struct AffineSubtorus {
    int n = 0;
    int k = 0;
    std::vector<IntVec> p;  // k spanning vectors
    RatVec E;               // length n, all entries > 0
    std::vector<IntVec> q;  // n-k orthogonal basis vectors

    /// e^{<a, x>} surrogate: prod_i E_i^{x_i}.
    Rat offset_pairing(const IntVec& x) const {
        Rat acc(1);
        for (int i = 0; i < n; ++i) acc *= rat_pow(E[i], x[i]);
        return acc;
    }
};

inline AffineSubtorus validate_subspace(std::vector<IntVec> p, RatVec E) {
    AffineSubtorus v;
    v.n = static_cast<int>(E.size());
    v.k = static_cast<int>(p.size());
    if (v.k > v.n) throw DimensionMismatch("more spanning vectors than ambient dimensions");
    for (int l = 0; l < v.k; ++l) {
        if (static_cast<int>(p[l].size()) != v.n) throw DimensionMismatch();
        if (is_zero(p[l])) throw NotPrimitive(l);
    }
    if (rational_rank(p) != v.k) throw Dependent();
    for (int l = 0; l < v.k; ++l)
        if (primitive_part(p[l]) != p[l]) throw NotPrimitive(l);
    for (int i = 0; i < v.n; ++i)
        if (E[i] <= 0) throw NonPositiveOffset(i);
    if (v.k == 0) {
        // kernel of an empty system is the full lattice, with the standard
        // basis; the subtorus itself is the single point w = E
        for (int i = 0; i < v.n; ++i) {
            IntVec e(v.n, Int(0));
            e[i] = 1;
            v.q.push_back(std::move(e));
        }
    } else {
        v.q = integer_kernel_basis(IntMat::from_rows(p));
    }
    v.p = std::move(p);
    v.E = std::move(E);
    return v;
}

/// Matrix of the pullback xi -> (<p_1, xi>, ..., <p_k, xi>).
inline IntMat pullback_matrix(const AffineSubtorus& v) {
    IntMat m(v.k, v.n);
    for (int l = 0; l < v.k; ++l)
        for (int i = 0; i < v.n; ++i) m(l, i) = v.p[l][i];
    return m;
}

/// Index data of one chart: J collects the coordinates whose edge
/// direction is orthogonal to every spanning vector; the per-equation
/// splits sort coordinates by the sign of <u_i, q_j>.
struct IndexProfile {
    int chart = 0;
    std::vector<int> J;
    struct Split {
        std::vector<int> plus, minus, zero;
    };
    std::vector<Split> splits;  // one per equation index j
};

inline IndexProfile index_profile(const ChartAtlas& atlas, const AffineSubtorus& v, int chart) {
    atlas.check_label(chart);
    IndexProfile profile;
    profile.chart = chart;
    for (int i = 0; i < atlas.n; ++i) {
        IntVec dir = atlas.edge_direction(chart, i);
        bool orthogonal = true;
        for (int l = 0; l < v.k; ++l)
            if (dot(v.p[l], dir) != 0) { orthogonal = false; break; }
        if (orthogonal) profile.J.push_back(i);
    }
    for (const auto& qj : v.q) {
        IndexProfile::Split split;
        for (int i = 0; i < atlas.n; ++i) {
            Int s = dot(atlas.normal(chart, i), qj);
            if (s >= 0) split.plus.push_back(i);
            if (s <= 0) split.minus.push_back(i);
            if (s == 0) split.zero.push_back(i);
        }
        profile.splits.push_back(std::move(split));
    }
    return profile;
}

/// One defining binomial of the subtorus closure in a chart:
///   prod_{s_i > 0} z_i^{s_i}  -  c * prod_{s_i < 0} z_i^{-s_i}
/// with s_i = <u_i, q_j> and c = prod_i E_i^{(q_j)_i} > 0.
struct BinomialEquation {
    int chart = 0;
    int j = 0;  // equation label, k+1..n
    IntVec s;
    Rat c;

    std::vector<int> index_plus() const {
        std::vector<int> out;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] >= 0) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> index_minus() const {
        std::vector<int> out;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] <= 0) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> index_zero() const {
        std::vector<int> out;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == 0) out.push_back(static_cast<int>(i));
        return out;
    }
};

inline std::vector<BinomialEquation> defining_equations(const ChartAtlas& atlas,
                                                        const AffineSubtorus& v, int chart) {
    atlas.check_label(chart);
    std::vector<BinomialEquation> eqs;
    for (size_t t = 0; t < v.q.size(); ++t) {
        BinomialEquation eq;
        eq.chart = chart;
        eq.j = v.k + 1 + static_cast<int>(t);
        eq.s.resize(atlas.n);
        for (int i = 0; i < atlas.n; ++i) eq.s[i] = dot(atlas.normal(chart, i), v.q[t]);
        eq.c = v.offset_pairing(v.q[t]);
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

template <class Scalar>
Scalar eq_coeff_cast(const Rat& c);
template <>
inline Rat eq_coeff_cast<Rat>(const Rat& c) { return c; }
template <>
inline std::complex<double> eq_coeff_cast<std::complex<double>>(const Rat& c) {
    return {to_double(c), 0.0};
}

/// Value of the binomial with the empty-product and 0^0 = 1 conventions.
template <class Scalar>
Scalar evaluate_equation(const BinomialEquation& eq, const std::vector<Scalar>& z) {
    assert(z.size() == eq.s.size());
    Scalar plus = scalar_one<Scalar>();
    Scalar minus = scalar_one<Scalar>();
    bool plus_zero = false, minus_zero = false;
    for (size_t i = 0; i < z.size(); ++i) {
        if (eq.s[i] > 0) {
            if (scalar_is_zero(z[i])) plus_zero = true;
            else plus *= scalar_pow(z[i], eq.s[i]);
        } else if (eq.s[i] < 0) {
            if (scalar_is_zero(z[i])) minus_zero = true;
            else minus *= scalar_pow(z[i], Int(-eq.s[i]));
        }
    }
    if (plus_zero) plus = Scalar(0);
    if (minus_zero) minus = Scalar(0);
    return plus - eq_coeff_cast<Scalar>(eq.c) * minus;
}

/// w_i = E_i exp(sum_l p_li (u_l + i v_l)): the subtorus point with
/// cylinder coordinates (u, v). Every chart's equations vanish on it.
inline CVec parametrize(const AffineSubtorus& v, const std::vector<double>& u,
                        const std::vector<double>& vv) {
    assert(static_cast<int>(u.size()) == v.k && static_cast<int>(vv.size()) == v.k);
    CVec w(v.n);
    for (int i = 0; i < v.n; ++i) {
        std::complex<double> expo{0.0, 0.0};
        for (int l = 0; l < v.k; ++l) {
            double pli = static_cast<double>(to_long(v.p[l][i]));
            expo += pli * std::complex<double>{u[l], vv[l]};
        }
        w[i] = to_double(v.E[i]) * std::exp(expo);
    }
    return w;
}

/// Element of the acting subtorus, unit-circle representation.
struct TorusElement {
    CVec t;

    static TorusElement from_angles(const std::vector<double>& angles) {
        TorusElement e;
        for (double a : angles) e.t.push_back(std::polar(1.0, a));
        return e;
    }
    bool unit(double tol = 1e-12) const {
        for (const auto& c : t)
            if (std::abs(std::abs(c) - 1.0) > tol) return false;
        return true;
    }
};

/// Subtorus action in a chart: coordinate i is scaled by
/// prod_l t_l^{<p_l, v_i>}.
inline CVec act(const AffineSubtorus& v, const TorusElement& t, const ChartAtlas& atlas,
                int chart, const CVec& z) {
    atlas.check_label(chart);
    assert(static_cast<int>(t.t.size()) == v.k);
    assert(static_cast<int>(z.size()) == atlas.n);
    CVec out(z.size());
    for (int i = 0; i < atlas.n; ++i) {
        std::complex<double> scale{1.0, 0.0};
        IntVec dir = atlas.edge_direction(chart, i);
        for (int l = 0; l < v.k; ++l) scale *= cplx_pow(t.t[l], to_long(dot(v.p[l], dir)));
        out[i] = scale * z[i];
    }
    return out;
}

}  // namespace toric
