#pragma once

// Shared fixtures: the three reference polytopes, the expected defining
// binomials for each catalogued direction (hand-checked against the chart
// frames), and seeded random generators used by the property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "toric/toric.hpp"

namespace fixtures {

using toric::Int;
using toric::IntVec;
using toric::Rat;
using toric::RatVec;

inline RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

inline std::vector<RatVec> cp2_vertices() {
    return {rv({0, 0}), rv({2, 0}), rv({0, 2})};
}

inline std::vector<RatVec> f1_vertices() {
    return {rv({0, 0}), rv({2, 0}), rv({1, 1}), rv({0, 1})};
}

inline std::vector<RatVec> blowup_cp3_vertices() {
    return {rv({0, 0, 0}), rv({2, 0, 0}), rv({0, 0, 2}),
            rv({1, 1, 0}), rv({0, 1, 0}), rv({0, 1, 1})};
}

inline std::vector<RatVec> unit_square_vertices() {
    return {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
}

inline toric::DelzantPolytope verified(const std::vector<RatVec>& pts) {
    auto result = toric::verify_delzant(pts);
    if (!result.ok()) throw std::runtime_error("fixture polytope failed verification");
    return *result.polytope;
}

struct Fixture {
    toric::DelzantPolytope poly;
    toric::ChartAtlas atlas;
};

inline Fixture make_fixture(const std::vector<RatVec>& pts) {
    Fixture f{verified(pts), {}};
    f.atlas = toric::build_atlas(f.poly);
    return f;
}

inline toric::AffineSubtorus subtorus(std::vector<IntVec> p, RatVec E) {
    return toric::validate_subspace(std::move(p), std::move(E));
}

inline toric::AffineSubtorus cp2_subtorus(long p1, long p2, RatVec E = rv({1, 1})) {
    return subtorus({iv({p1, p2})}, std::move(E));
}

// ---- expected binomial sets ------------------------------------------------
//
// Each expected chart is one list of (exponent vector, coefficient) in that
// chart's own coordinate order. Computed and expected systems are compared
// as unordered chart sets, with each chart taken modulo a coordinate
// permutation shared by its equations and modulo flipping any equation to
// its mirror (s, c) -> (-s, 1/c).

struct ExpectedEquation {
    IntVec s;
    Rat c = Rat(1);
};
using ExpectedChart = std::vector<ExpectedEquation>;

inline std::string encode_equation(const IntVec& s, const Rat& c) {
    std::string out;
    for (const auto& x : s) out += x.str() + ",";
    return out + "|" + toric::rat_to_string(c);
}

inline std::string equation_key(const IntVec& s, const Rat& c) {
    std::string a = encode_equation(s, c);
    std::string b = encode_equation(toric::negated(s), Rat(1) / c);
    return std::min(a, b);
}

inline std::string chart_key(const ExpectedChart& eqs, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        std::vector<std::string> keys;
        for (const auto& eq : eqs) {
            IntVec permuted(n);
            for (int i = 0; i < n; ++i) permuted[i] = eq.s[perm[i]];
            keys.push_back(equation_key(permuted, eq.c));
        }
        std::sort(keys.begin(), keys.end());
        std::string candidate;
        for (const auto& k : keys) candidate += k + ";";
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::vector<std::string> chart_key_multiset(const std::vector<ExpectedChart>& charts,
                                                   int n) {
    std::vector<std::string> keys;
    for (const auto& c : charts) keys.push_back(chart_key(c, n));
    std::sort(keys.begin(), keys.end());
    return keys;
}

inline std::vector<ExpectedChart> computed_charts(const toric::ChartAtlas& atlas,
                                                  const toric::AffineSubtorus& v) {
    std::vector<ExpectedChart> out;
    for (int chart = 0; chart < atlas.size(); ++chart) {
        ExpectedChart ec;
        for (const auto& eq : toric::defining_equations(atlas, v, chart))
            ec.push_back({eq.s, eq.c});
        out.push_back(std::move(ec));
    }
    return out;
}

inline bool equations_match(const toric::ChartAtlas& atlas, const toric::AffineSubtorus& v,
                            const std::vector<ExpectedChart>& expected) {
    return chart_key_multiset(computed_charts(atlas, v), atlas.n) ==
           chart_key_multiset(expected, atlas.n);
}

/// Binomial sets printed in the source examples, with unit offset. The
/// exponent rows follow each example's own chart conventions; the
/// comparison quotients those away.
inline std::vector<ExpectedChart> expected_cp2(long p1, long p2) {
    auto charts3 = [](IntVec a, IntVec b, IntVec c) {
        return std::vector<ExpectedChart>{{{a}}, {{b}}, {{c}}};
    };
    if (p1 == 1 && p2 == 0) return charts3(iv({0, 1}), iv({-1, 0}), iv({1, -1}));
    if (p1 == 0 && p2 == 1) return charts3(iv({1, 0}), iv({-1, 1}), iv({0, -1}));
    if (p1 == 1 && p2 == 1) return charts3(iv({1, -1}), iv({0, 1}), iv({-1, 0}));
    if (p1 == 1 && p2 == -1) return charts3(iv({1, 1}), iv({-2, 1}), iv({1, -2}));
    if (p1 == 1 && p2 == 2) return charts3(iv({2, -1}), iv({-1, 2}), iv({-1, -1}));
    if (p1 == 2 && p2 == 1) return charts3(iv({1, -2}), iv({1, 1}), iv({-2, 1}));
    if (p1 == 1 && p2 >= 3)  // p = (1, a)
        return charts3(iv({p2, -1}), iv({1 - p2, p2}), iv({-1, 1 - p2}));
    if (p2 == 1 && p1 >= 3)  // p = (a, 1)
        return charts3(iv({1, -p1}), iv({p1 - 1, 1}), iv({-p1, p1 - 1}));
    if (p1 == 1 && p2 <= -2)  // p = (1, -a)
        return charts3(iv({-p2, 1}), iv({p2 - 1, -p2}), iv({1, p2 - 1}));
    if (p2 == -1 && p1 >= 3)  // p = (a, -1)
        return charts3(iv({1, p1}), iv({-p1 - 1, 1}), iv({p1, -p1 - 1}));
    throw std::runtime_error("no catalogued equations for this direction");
}

inline std::vector<ExpectedChart> expected_f1_p10() {
    return {{{iv({1, 0})}}, {{iv({1, -1})}}, {{iv({-1, -1})}}, {{iv({-1, 0})}}};
}

inline std::vector<ExpectedChart> expected_blowup_cp3() {
    return {{{iv({1, 0, 1})}},  {{iv({0, -2, 1})}}, {{iv({0, 1, -2})}},
            {{iv({0, 1, -2})}}, {{iv({1, 1, 0})}},  {{iv({1, 0, -2})}}};
}

/// The shifted variant of the axis direction: offset surrogate (1, 2).
inline std::vector<ExpectedChart> expected_cp2_p10_shifted() {
    Rat two(2);
    return {{{iv({0, 1}), two}}, {{iv({-1, 0}), two}}, {{iv({1, -1}), two}}};
}

// ---- seeded random generators ---------------------------------------------

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    Rat rational(long lo, long hi, long max_den = 3) {
        long den = integer(1, max_den);
        return Rat(integer(lo * den, hi * den), den);
    }
    Rat positive_rational() {
        static const long nums[] = {1, 2, 3, 1, 5, 2};
        static const long dens[] = {1, 1, 2, 3, 2, 5};
        long i = integer(0, 5);
        return Rat(nums[i], dens[i]);
    }
};

/// Product of shifted intervals and scaled standard simplices: always a
/// valid polytope for the verifier, with every vertex a product of block
/// vertices.
inline std::vector<RatVec> random_product_polytope(Rng& rng, int target_dim) {
    std::vector<std::vector<RatVec>> blocks;
    int dim = 0;
    while (dim < target_dim) {
        int remaining = target_dim - dim;
        int choice = remaining >= 2 ? static_cast<int>(rng.integer(0, 1)) : 0;
        if (choice == 0) {
            Rat len = rng.positive_rational() + 1;
            blocks.push_back({RatVec{Rat(0)}, RatVec{len}});
            dim += 1;
        } else {
            int d = remaining >= 3 ? static_cast<int>(rng.integer(2, 3)) : 2;
            Rat len(rng.integer(1, 3));
            std::vector<RatVec> verts{RatVec(d, Rat(0))};
            for (int i = 0; i < d; ++i) {
                RatVec v(d, Rat(0));
                v[i] = len;
                verts.push_back(std::move(v));
            }
            blocks.push_back(std::move(verts));
            dim += d;
        }
    }
    std::vector<RatVec> vertices{{}};
    for (const auto& block : blocks) {
        std::vector<RatVec> next;
        for (const auto& prefix : vertices)
            for (const auto& bv : block) {
                RatVec combined = prefix;
                combined.insert(combined.end(), bv.begin(), bv.end());
                next.push_back(std::move(combined));
            }
        vertices = std::move(next);
    }
    RatVec shift(target_dim);
    for (int i = 0; i < target_dim; ++i) shift[i] = rng.rational(-3, 3);
    for (auto& v : vertices)
        for (int i = 0; i < target_dim; ++i) v[i] += shift[i];
    return vertices;
}

/// Random valid subtorus datum in dimension n: primitive independent
/// spanning vectors and a positive rational offset surrogate.
inline toric::AffineSubtorus random_subtorus(Rng& rng, int n, int k = -1) {
    if (k < 0) k = static_cast<int>(rng.integer(1, n));
    while (true) {
        std::vector<IntVec> p;
        for (int l = 0; l < k; ++l) {
            IntVec row(n);
            bool zero = true;
            for (int i = 0; i < n; ++i) {
                row[i] = rng.integer(-3, 3);
                if (row[i] != 0) zero = false;
            }
            if (zero) row[static_cast<size_t>(rng.integer(0, n - 1))] = 1;
            p.push_back(toric::primitive_part(row));
        }
        if (toric::rational_rank(p) != k) continue;
        RatVec E(n);
        for (int i = 0; i < n; ++i) E[i] = rng.positive_rational();
        return toric::validate_subspace(std::move(p), std::move(E));
    }
}

/// Random unimodular matrix built from integer row operations.
inline toric::IntMat random_unimodular(Rng& rng, int n) {
    toric::IntMat m = toric::IntMat::identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = static_cast<int>(rng.integer(0, n - 1));
        int j = static_cast<int>(rng.integer(0, n - 1));
        if (i == j) continue;
        Int f(rng.integer(-2, 2));
        for (int c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    }
    return m;
}

inline toric::CVec random_torus_point(Rng& rng, int n) {
    toric::CVec w(n);
    for (int i = 0; i < n; ++i) {
        double r = std::exp(rng.real(-0.7, 0.7));
        double theta = rng.real(0.0, 6.28318530717958648);
        w[i] = std::polar(r, theta);
    }
    return w;
}

}  // namespace fixtures
