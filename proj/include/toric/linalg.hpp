#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense arbitrary-precision integer matrix, row-major. Immutable by
/// convention once handed out; every operation returns a fresh value.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMat&) const = default;

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMat from_columns(const std::vector<IntVec>& cs) {
        if (cs.empty()) return {};
        IntMat m(static_cast<int>(cs[0].size()), static_cast<int>(cs.size()));
        for (int j = 0; j < m.cols; ++j) {
            assert(static_cast<int>(cs[j].size()) == m.rows);
            for (int i = 0; i < m.rows; ++i) m(i, j) = cs[j][i];
        }
        return m;
    }

    static IntMat from_rows(const std::vector<IntVec>& rs) {
        if (rs.empty()) return {};
        IntMat m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            assert(static_cast<int>(rs[i].size()) == m.cols);
            for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }

    IntVec row(int i) const {
        IntVec v(cols);
        for (int j = 0; j < cols; ++j) v[j] = (*this)(i, j);
        return v;
    }

    IntVec col(int j) const {
        IntVec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
};

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const RatMat&) const = default;

    static RatMat from_int(const IntMat& m) {
        RatMat r(m.rows, m.cols);
        for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
        return r;
    }
};

inline IntMat mul(const IntMat& x, const IntMat& y) {
    assert(x.cols == y.rows);
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

inline IntVec mul(const IntMat& m, const IntVec& v) {
    assert(m.cols == static_cast<int>(v.size()));
    IntVec out(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline Int dot(const IntVec& x, const IntVec& y) {
    assert(x.size() == y.size());
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Rat dot(const IntVec& x, const RatVec& y) {
    assert(x.size() == y.size());
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += Rat(x[i]) * y[i];
    return s;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

template <class Vec>
bool lex_less(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
    }
    return false;
}

inline IntVec negated(IntVec v) {
    for (auto& x : v) x = -x;
    return v;
}

/// Divides out the gcd of the entries, keeping the direction.
inline IntVec primitive_part(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g == 0) throw ZeroVector();
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

/// Flips the sign so the first nonzero entry is positive.
inline IntVec sign_normalized(IntVec v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return negated(std::move(v));
    }
    return v;
}

namespace detail {

// Column-style Hermite reduction. Applies unimodular column operations to
// work and mirrors them on trans; afterwards work has staircase shape with
// pivot columns 0..rank-1 and zero columns rank..cols-1.
inline int column_echelon(IntMat& work, IntMat& trans) {
    const int rows = work.rows, cols = work.cols;
    auto col_swap = [&](IntMat& m, int x, int y) {
        for (int i = 0; i < m.rows; ++i) std::swap(m(i, x), m(i, y));
    };
    auto col_axpy = [&](IntMat& m, int dst, int src, const Int& f) {
        for (int i = 0; i < m.rows; ++i) m(i, dst) -= f * m(i, src);
    };
    auto col_negate = [&](IntMat& m, int x) {
        for (int i = 0; i < m.rows; ++i) m(i, x) = -m(i, x);
    };

    int pivot = 0;
    for (int i = 0; i < rows && pivot < cols; ++i) {
        while (true) {
            int best = -1;
            for (int j = pivot; j < cols; ++j) {
                if (work(i, j) == 0) continue;
                if (best < 0 || boost::multiprecision::abs(work(i, j)) <
                                    boost::multiprecision::abs(work(i, best)))
                    best = j;
            }
            if (best < 0) break;
            if (best != pivot) {
                col_swap(work, pivot, best);
                col_swap(trans, pivot, best);
            }
            bool clean = true;
            for (int j = pivot + 1; j < cols; ++j) {
                if (work(i, j) == 0) continue;
                Int f = work(i, j) / work(i, pivot);
                col_axpy(work, j, pivot, f);
                col_axpy(trans, j, pivot, f);
                if (work(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot < cols && work(i, pivot) != 0) {
            if (work(i, pivot) < 0) {
                col_negate(work, pivot);
                col_negate(trans, pivot);
            }
            ++pivot;
        }
    }
    return pivot;
}

}  // namespace detail

/// Z-basis of the saturated kernel lattice {x in Z^n : Mx = 0}. The basis
/// comes from a unimodular column reduction, so it spans every integer
/// solution (not merely a finite-index sublattice) and each vector is
/// primitive. Requires the rows of M to be linearly independent.
inline std::vector<IntVec> integer_kernel_basis(const IntMat& m) {
    IntMat work = m;
    IntMat trans = IntMat::identity(m.cols);
    int rank = detail::column_echelon(work, trans);
    if (rank < m.rows) throw RankDeficient();
    std::vector<IntVec> basis;
    basis.reserve(m.cols - rank);
    for (int j = rank; j < m.cols; ++j) basis.push_back(sign_normalized(trans.col(j)));
    return basis;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMat& m) {
    assert(m.rows == m.cols);
    const int n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

/// Exact inverse of a matrix with determinant +-1; the inverse is again
/// integral. Throws NotUnimodular (carrying the determinant) otherwise.
inline IntMat unimodular_inverse(const IntMat& m) {
    assert(m.rows == m.cols);
    Int det = determinant(m);
    if (det != 1 && det != -1) throw NotUnimodular(det.str());
    const int n = m.rows;
    // Gauss-Jordan over the rationals; entries of the result are integers
    // because |det| = 1.
    RatMat w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = Rat(m(i, j));
        w(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (w(r, c) != 0) { piv = r; break; }
        assert(piv >= 0);
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(w(c, j), w(piv, j));
        Rat inv = Rat(1) / w(c, c);
        for (int j = 0; j < 2 * n; ++j) w(c, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || w(r, c) == 0) continue;
            Rat f = w(r, c);
            for (int j = 0; j < 2 * n; ++j) w(r, j) -= f * w(c, j);
        }
    }
    IntMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            assert(rat_den(w(i, n + j)) == 1);
            out(i, j) = rat_num(w(i, n + j));
        }
    return out;
}

/// Row rank over Q.
inline int rational_rank(RatMat m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(piv, j));
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m(r, c) == 0) continue;
            Rat f = m(r, c) / m(rank, c);
            for (int j = c; j < m.cols; ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline int rational_rank(const std::vector<IntVec>& rows) {
    if (rows.empty()) return 0;
    return rational_rank(RatMat::from_int(IntMat::from_rows(rows)));
}

/// One exact solution of Ax = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
inline std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b) {
    assert(A.rows == static_cast<int>(b.size()));
    RatMat w(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) w(i, j) = A(i, j);
        w(i, A.cols) = b[i];
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < A.cols && rank < A.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < A.rows; ++r)
            if (w(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j <= A.cols; ++j) std::swap(w(rank, j), w(piv, j));
        Rat inv = Rat(1) / w(rank, c);
        for (int j = c; j <= A.cols; ++j) w(rank, j) *= inv;
        for (int r = 0; r < A.rows; ++r) {
            if (r == rank || w(r, c) == 0) continue;
            Rat f = w(r, c);
            for (int j = c; j <= A.cols; ++j) w(r, j) -= f * w(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int r = rank; r < A.rows; ++r)
        if (w(r, A.cols) != 0) return std::nullopt;
    RatVec x(A.cols, Rat(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = w(r, A.cols);
    return x;
}

/// Basis of the Q-kernel of A via reduced row echelon form (the standard
/// free-variable construction). Independent of the integer lattice route;
/// tests use it as an oracle.
inline std::vector<RatVec> rational_kernel_basis(RatMat m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(m(rank, j), m(piv, j));
        Rat inv = Rat(1) / m(rank, c);
        for (int j = c; j < cols; ++j) m(rank, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m(r, c) == 0) continue;
            Rat f = m(r, c);
            for (int j = c; j < cols; ++j) m(r, j) -= f * m(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(cols, Rat(0));
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace toric
