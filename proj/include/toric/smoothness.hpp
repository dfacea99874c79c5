#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/subtorus.hpp"

namespace toric {

/// Coordinate-support stratum of one chart: coordinates in the mask range
/// over nonzero values, the rest are pinned to zero. The 2^n strata of a
/// chart decompose its closure analysis into torus-invariant pieces.
struct Stratum {
    int chart = 0;
    uint32_t mask = 0;  // bit i set <=> coordinate i is allowed nonzero
    int n = 0;

    bool allows(int i) const { return (mask >> i) & 1u; }
};

enum class RestrictionKind {
    Binomial,         // both monomials survive on the stratum
    MonomialPlus,     // only the positive-exponent monomial survives
    MonomialMinus,    // only the coefficient side survives
    IdenticallyZero,  // both sides vanish on the stratum
};

struct RestrictedEquation {
    RestrictionKind kind;
    const BinomialEquation* eq;
    bool surviving_is_constant;  // surviving side has no variables
};

struct RestrictedSystem {
    Stratum stratum;
    std::vector<RestrictedEquation> eqs;
};

/// Sets z_i = 0 for every coordinate outside the stratum and classifies
/// what is left of each binomial.
inline RestrictedSystem restrict_to_stratum(const std::vector<BinomialEquation>& eqs,
                                            const Stratum& st) {
    RestrictedSystem out;
    out.stratum = st;
    for (const auto& eq : eqs) {
        bool plus_alive = true, minus_alive = true;
        bool plus_constant = true, minus_constant = true;
        for (int i = 0; i < st.n; ++i) {
            if (eq.s[i] > 0) {
                if (!st.allows(i)) plus_alive = false;
                else plus_constant = false;
            }
            if (eq.s[i] < 0) {
                if (!st.allows(i)) minus_alive = false;
                else minus_constant = false;
            }
        }
        RestrictedEquation r{RestrictionKind::Binomial, &eq, false};
        if (plus_alive && minus_alive) {
            r.kind = RestrictionKind::Binomial;
        } else if (plus_alive) {
            r.kind = RestrictionKind::MonomialPlus;
            r.surviving_is_constant = plus_constant;
        } else if (minus_alive) {
            r.kind = RestrictionKind::MonomialMinus;
            r.surviving_is_constant = minus_constant;
        } else {
            r.kind = RestrictionKind::IdenticallyZero;
        }
        out.eqs.push_back(r);
    }
    return out;
}

/// A stratum meets the zero locus unless some equation restricts to a
/// single surviving monomial: its variables all lie in the stratum, so it
/// never vanishes there (a vanishing coordinate would contradict the
/// support). Points killed that way reappear in smaller strata.
inline bool stratum_intersects_locus(const RestrictedSystem& rs) {
    for (const auto& r : rs.eqs)
        if (r.kind == RestrictionKind::MonomialPlus || r.kind == RestrictionKind::MonomialMinus)
            return false;
    return true;
}

/// True when some equation restricts to a nonzero constant; then every
/// sub-stratum inherits the same obstruction.
inline bool has_constant_obstruction(const RestrictedSystem& rs) {
    for (const auto& r : rs.eqs)
        if ((r.kind == RestrictionKind::MonomialPlus ||
             r.kind == RestrictionKind::MonomialMinus) &&
            r.surviving_is_constant)
            return true;
    return false;
}

/// Exact Jacobian of the binomial system at a rational point. Coordinate i
/// occurs in exactly one monomial of each equation (fixed by the sign of
/// s_i), so each entry is a single monomial derivative, evaluated with the
/// 0^0 = 1 convention.
inline RatMat exact_jacobian(const std::vector<BinomialEquation>& eqs, const RatVec& z) {
    const int n = static_cast<int>(z.size());
    RatMat jac(static_cast<int>(eqs.size()), n);
    for (int r = 0; r < jac.rows; ++r) {
        const auto& eq = eqs[r];
        for (int i = 0; i < n; ++i) {
            if (eq.s[i] == 0) continue;
            bool plus_side = eq.s[i] > 0;
            Int expo = plus_side ? eq.s[i] : Int(-eq.s[i]);
            Rat term(expo);
            bool vanished = false;
            if (z[i] == 0) {
                if (expo - 1 > 0) vanished = true;
            } else {
                term *= rat_pow(z[i], expo - 1);
            }
            if (!vanished) {
                for (int l = 0; l < n && !vanished; ++l) {
                    if (l == i) continue;
                    bool in_side = plus_side ? eq.s[l] > 0 : eq.s[l] < 0;
                    if (!in_side) continue;
                    if (z[l] == 0) vanished = true;
                    else term *= rat_pow(z[l], plus_side ? eq.s[l] : Int(-eq.s[l]));
                }
            }
            if (vanished) continue;
            jac(r, i) = plus_side ? term : Rat(-eq.c * term);
        }
    }
    return jac;
}

/// Same formula over the complex numbers, for the floating oracle.
inline std::vector<CVec> complex_jacobian(const std::vector<BinomialEquation>& eqs,
                                          const CVec& z) {
    const int n = static_cast<int>(z.size());
    std::vector<CVec> jac(eqs.size(), CVec(n, {0.0, 0.0}));
    for (size_t r = 0; r < eqs.size(); ++r) {
        const auto& eq = eqs[r];
        for (int i = 0; i < n; ++i) {
            if (eq.s[i] == 0) continue;
            bool plus_side = eq.s[i] > 0;
            long expo = to_long(plus_side ? eq.s[i] : Int(-eq.s[i]));
            std::complex<double> term{static_cast<double>(expo), 0.0};
            term *= cplx_pow(z[i], expo - 1);
            for (int l = 0; l < n; ++l) {
                if (l == i) continue;
                bool in_side = plus_side ? eq.s[l] > 0 : eq.s[l] < 0;
                if (!in_side) continue;
                term *= cplx_pow(z[l], to_long(plus_side ? eq.s[l] : Int(-eq.s[l])));
            }
            jac[r][i] = plus_side ? term : -eq_coeff_cast<std::complex<double>>(eq.c) * term;
        }
    }
    return jac;
}

/// Numerical rank via full-pivot elimination; pivots are accepted while
/// they exceed tol times the largest pivot encountered.
inline int numeric_rank_probe(const std::vector<BinomialEquation>& eqs, const CVec& z,
                              double tol) {
    auto jac = complex_jacobian(eqs, z);
    const int rows = static_cast<int>(jac.size());
    const int cols = rows ? static_cast<int>(jac[0].size()) : 0;
    int rank = 0;
    double largest = 0.0;
    std::vector<bool> used_row(rows, false), used_col(cols, false);
    while (true) {
        int pr = -1, pc = -1;
        double best = 0.0;
        for (int r = 0; r < rows; ++r) {
            if (used_row[r]) continue;
            for (int c = 0; c < cols; ++c) {
                if (used_col[c]) continue;
                double mag = std::abs(jac[r][c]);
                if (mag > best) { best = mag; pr = r; pc = c; }
            }
        }
        if (pr < 0) break;
        if (largest == 0.0) largest = best;
        if (best <= tol * largest) break;
        ++rank;
        used_row[pr] = true;
        used_col[pc] = true;
        for (int r = 0; r < rows; ++r) {
            if (used_row[r]) continue;
            std::complex<double> f = jac[r][pc] / jac[pr][pc];
            for (int c = 0; c < cols; ++c) jac[r][c] -= f * jac[pr][c];
        }
    }
    return rank;
}

struct StratumRank {
    int rank = 0;       // minimum Jacobian rank over the candidate points
    RatVec witness;     // exact rational point attaining it
    int surviving = 0;  // count of equations still binomial on the stratum
};

namespace detail {

/// Canonical locus point of a stratum: the offset surrogate on the allowed
/// coordinates, zero elsewhere. Every surviving binomial vanishes there
/// exactly because its exponent support lies inside the stratum and the
/// coefficient is the matching offset monomial.
inline RatVec stratum_base_point(const RatVec& chart_surrogate, const Stratum& st) {
    RatVec z(chart_surrogate.size(), Rat(0));
    for (int i = 0; i < st.n; ++i)
        if (st.allows(i)) z[i] = chart_surrogate[i];
    return z;
}

}  // namespace detail

/// Minimum Jacobian rank on (locus within the stratum), with an exact
/// rational witness attaining it.
///
/// The rank at a support-S point splits into the surviving binomial rows
/// (restricted exponent vectors, independent, constant rank across the
/// stratum) and the rows of equations that die on S, whose only nonzero
/// entries sit at outside coordinates carrying exponent exactly +-1. The
/// candidate points are the canonical surrogate point and its sign twists
/// that stay on the locus; ranks are evaluated exactly at each.
inline StratumRank stratum_jacobian_rank(const std::vector<BinomialEquation>& eqs,
                                         const Stratum& st, const RatVec& chart_surrogate) {
    auto rs = restrict_to_stratum(eqs, st);
    assert(stratum_intersects_locus(rs));
    StratumRank out;
    for (const auto& r : rs.eqs)
        if (r.kind == RestrictionKind::Binomial) ++out.surviving;

    std::vector<int> support;
    for (int i = 0; i < st.n; ++i)
        if (st.allows(i)) support.push_back(i);

    RatVec base = detail::stratum_base_point(chart_surrogate, st);
    out.rank = rational_rank(exact_jacobian(eqs, base));
    out.witness = base;

    // With every equation still binomial the rank is the constant count of
    // their independent exponent rows; nothing to minimize.
    if (out.surviving == static_cast<int>(rs.eqs.size()) || out.rank == 0) return out;

    // Sign twists tau in {+-1}^S stay on the locus when every surviving
    // binomial has even twisted weight; among rational points they are the
    // only extra candidates where the dying rows can collide.
    const int sbits = static_cast<int>(support.size());
    for (uint32_t twist = 1; twist < (1u << sbits); ++twist) {
        bool on_locus = true;
        for (const auto& r : rs.eqs) {
            if (r.kind != RestrictionKind::Binomial) continue;
            Int parity = 0;
            for (int b = 0; b < sbits; ++b)
                if ((twist >> b) & 1u) parity += r.eq->s[support[b]];
            if ((parity & 1) != 0) { on_locus = false; break; }
        }
        if (!on_locus) continue;
        RatVec z = base;
        for (int b = 0; b < sbits; ++b)
            if ((twist >> b) & 1u) z[support[b]] = -z[support[b]];
        int rank = rational_rank(exact_jacobian(eqs, z));
        if (rank < out.rank) {
            out.rank = rank;
            out.witness = z;
        }
    }
    return out;
}

/// Whether the stratum is reachable as a limit of points with all
/// coordinates nonzero on the locus: exact feasibility of a weight vector
/// orthogonal to every exponent row, vanishing on the stratum and strictly
/// positive outside it. Components failing this are flagged, not removed.
inline bool stratum_is_torus_limit(const std::vector<BinomialEquation>& eqs, const Stratum& st) {
    std::vector<int> outside;
    for (int i = 0; i < st.n; ++i)
        if (!st.allows(i)) outside.push_back(i);
    if (outside.empty()) return true;
    RatMat A(static_cast<int>(eqs.size()), static_cast<int>(outside.size()));
    RatVec b(eqs.size(), Rat(0));
    for (size_t r = 0; r < eqs.size(); ++r) {
        Rat rowsum(0);
        for (size_t c = 0; c < outside.size(); ++c) {
            A(static_cast<int>(r), static_cast<int>(c)) = Rat(eqs[r].s[outside[c]]);
            rowsum += Rat(eqs[r].s[outside[c]]);
        }
        b[r] = -rowsum;
    }
    return lp_feasible(A, b);
}

struct SmoothnessWitness {
    int chart = 0;
    uint32_t mask = 0;
    RatVec point;
    int rank = 0;
};

struct StratumRecord {
    uint32_t mask = 0;
    bool intersects = false;
    bool pruned = false;
    bool torus_limit = true;
    int surviving = -1;
    int rank = -1;
    std::string note;
};

struct SmoothnessReport {
    enum class Verdict { Smooth, Singular };
    Verdict verdict = Verdict::Smooth;
    int expected_rank = 0;  // codimension of the subtorus
    std::vector<SmoothnessWitness> witnesses;
    std::vector<std::vector<StratumRecord>> audit;  // per chart

    bool smooth() const { return verdict == Verdict::Smooth; }
};

/// Full smoothness decision: every chart, every locus-meeting stratum must
/// attain Jacobian rank n-k. Strata are visited from full support
/// downward; a stratum whose restriction contains a nonzero constant
/// obstructs all of its sub-strata, which are pruned.
inline SmoothnessReport classify(const ChartAtlas& atlas, const AffineSubtorus& v) {
    SmoothnessReport report;
    report.expected_rank = atlas.n - v.k;
    report.audit.resize(atlas.size());

    for (int chart = 0; chart < atlas.size(); ++chart) {
        auto eqs = defining_equations(atlas, v, chart);
        RatVec surrogate(atlas.n);
        for (int i = 0; i < atlas.n; ++i)
            surrogate[i] = v.offset_pairing(atlas.edge_direction(chart, i));

        std::vector<uint32_t> masks;
        for (uint32_t m = 0; m < (1u << atlas.n); ++m) masks.push_back(m);
        std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            if (pa != pb) return pa > pb;
            return a > b;
        });

        std::vector<uint32_t> obstructed;
        for (uint32_t mask : masks) {
            StratumRecord rec;
            rec.mask = mask;
            bool pruned = false;
            for (uint32_t big : obstructed)
                if ((mask & big) == mask) { pruned = true; break; }
            if (pruned) {
                rec.pruned = true;
                rec.intersects = false;
                rec.note = "inherits a constant obstruction";
                report.audit[chart].push_back(std::move(rec));
                continue;
            }
            Stratum st{chart, mask, atlas.n};
            auto rs = restrict_to_stratum(eqs, st);
            rec.intersects = stratum_intersects_locus(rs);
            if (!rec.intersects) {
                if (has_constant_obstruction(rs)) {
                    obstructed.push_back(mask);
                    rec.note = "restricts to a nonzero constant";
                } else {
                    rec.note = "restricts to a nonvanishing monomial";
                }
                report.audit[chart].push_back(std::move(rec));
                continue;
            }
            auto sr = stratum_jacobian_rank(eqs, st, surrogate);
            rec.surviving = sr.surviving;
            rec.rank = sr.rank;
            rec.torus_limit = stratum_is_torus_limit(eqs, st);
            if (!rec.torus_limit) rec.note = "no torus points limit onto this stratum";
            report.audit[chart].push_back(rec);
            if (sr.rank < report.expected_rank)
                report.witnesses.push_back({chart, mask, sr.witness, sr.rank});
        }
    }

    report.verdict = report.witnesses.empty() ? SmoothnessReport::Verdict::Smooth
                                              : SmoothnessReport::Verdict::Singular;
    return report;
}

}  // namespace toric
