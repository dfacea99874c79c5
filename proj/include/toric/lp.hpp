#pragma once

#include <vector>

#include "toric/linalg.hpp"

namespace toric {

/// Decides whether {x >= 0 : Ax = b} is nonempty, exactly.
///
/// Phase-1 simplex over the rationals with Bland's rule, so it terminates
/// on every input and never misclassifies a boundary case the way a
/// floating-point solver could.
inline bool lp_feasible(const RatMat& A, const RatVec& b) {
    const int m = A.rows;
    const int d = A.cols;
    assert(static_cast<int>(b.size()) == m);
    if (m == 0) return true;

    // Tableau [A | I | b] with b >= 0; basis starts on the artificials.
    RatMat t(m, d + m + 1);
    for (int i = 0; i < m; ++i) {
        int flip = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < d; ++j) t(i, j) = flip * A(i, j);
        t(i, d + i) = 1;
        t(i, d + m) = flip * b[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = d + i;

    auto reduced_cost = [&](int j) {
        // cost 1 on artificials, 0 on originals
        Rat rc = j >= d ? Rat(1) : Rat(0);
        for (int i = 0; i < m; ++i)
            if (basis[i] >= d) rc -= t(i, j);
        return rc;
    };

    while (true) {
        int enter = -1;
        for (int j = 0; j < d + m; ++j) {
            if (reduced_cost(j) < 0) { enter = j; break; }  // Bland: smallest index
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rat ratio = t(i, d + m) / t(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded in phase 1 cannot happen, but stay safe
        Rat inv = Rat(1) / t(leave, enter);
        for (int j = 0; j <= d + m; ++j) t(leave, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            Rat f = t(i, enter);
            for (int j = 0; j <= d + m; ++j) t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= d) objective += t(i, d + m);
    return objective == 0;
}

/// Membership x in conv(points), exactly.
inline bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& x) {
    if (points.empty()) return false;
    const int n = static_cast<int>(x.size());
    const int s = static_cast<int>(points.size());
    RatMat A(n + 1, s);
    RatVec b(n + 1);
    for (int j = 0; j < s; ++j) {
        assert(static_cast<int>(points[j].size()) == n);
        for (int i = 0; i < n; ++i) A(i, j) = points[j][i];
        A(n, j) = 1;
    }
    for (int i = 0; i < n; ++i) b[i] = x[i];
    b[n] = 1;
    return lp_feasible(A, b);
}

}  // namespace toric
