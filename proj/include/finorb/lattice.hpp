#pragma once

// Integer linear algebra over arbitrary-precision integers: column-style
// Hermite normal form with transformation matrix, saturated integer kernel
// bases, and rational rank. One algorithm serves all three: the HNF pivot
// count is the rank and the transform columns matching zero HNF columns are
// a kernel basis.

#include <finorb/rational.hpp>

#include <cassert>
#include <vector>

namespace finorb::lattice {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    Int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows_in) {
        IntMatrix m(static_cast<int>(rows_in.size()),
                    rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            assert(static_cast<int>(rows_in[i].size()) == m.cols);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& cols_in) {
        IntMatrix m(cols_in.empty() ? 0 : static_cast<int>(cols_in[0].size()),
                    static_cast<int>(cols_in.size()));
        for (int j = 0; j < m.cols; ++j) {
            assert(static_cast<int>(cols_in[j].size()) == m.rows);
            for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols_in[j][i];
        }
        return m;
    }

    IntVector column(int j) const {
        IntVector v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    IntVector apply(const IntVector& x) const {
        assert(static_cast<int>(x.size()) == cols);
        IntVector y(rows, Int(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

struct HermiteResult {
    IntMatrix h;  // A*U = H, column Hermite form
    IntMatrix u;  // unimodular
    int rank = 0;
};

namespace detail {

inline void add_column_multiple(IntMatrix& m, int dst, int src, const Int& f) {
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}

inline void swap_columns(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

inline void negate_column(IntMatrix& m, int j) {
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

// Extended gcd: returns g >= 0 with g = x*a + y*b.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) { x = -1; y = 0; return -a; }
        x = 1; y = 0;
        return a;
    }
    Int x1, y1;
    Int g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Combine columns c and l so that row r holds (gcd, 0); the 2x2 column
// transform has determinant 1.
inline void gcd_columns(IntMatrix& h, IntMatrix& u, int r, int c, int l) {
    Int a = h.at(r, c), b = h.at(r, l);
    if (b == 0) return;
    if (a == 0) {
        swap_columns(h, c, l);
        swap_columns(u, c, l);
        negate_column(h, l);
        negate_column(u, l);
        return;
    }
    Int x, y;
    Int g = xgcd(a, b, x, y);
    Int ag = a / g, bg = b / g;
    for (int i = 0; i < h.rows; ++i) {
        Int hc = h.at(i, c), hl = h.at(i, l);
        h.at(i, c) = x * hc + y * hl;
        h.at(i, l) = -bg * hc + ag * hl;
    }
    for (int i = 0; i < u.rows; ++i) {
        Int uc = u.at(i, c), ul = u.at(i, l);
        u.at(i, c) = x * uc + y * ul;
        u.at(i, l) = -bg * uc + ag * ul;
    }
}

}  // namespace detail

// Column Hermite normal form: zero columns last, each pivot (first nonzero
// entry of its column) positive, entries left of a pivot in the pivot's row
// reduced into [0, pivot).
inline HermiteResult hermite_normal_form(const IntMatrix& a) {
    HermiteResult res;
    res.h = a;
    res.u = IntMatrix::identity(a.cols);
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int c = 0;
    for (int r = 0; r < a.rows && c < a.cols; ++r) {
        int nz = -1;
        for (int l = c; l < a.cols; ++l)
            if (h.at(r, l) != 0) { nz = l; break; }
        if (nz < 0) continue;
        if (nz != c) {
            detail::swap_columns(h, c, nz);
            detail::swap_columns(u, c, nz);
            detail::negate_column(h, nz);
            detail::negate_column(u, nz);
        }
        for (int l = c + 1; l < a.cols; ++l) detail::gcd_columns(h, u, r, c, l);
        if (h.at(r, c) < 0) {
            detail::negate_column(h, c);
            detail::negate_column(u, c);
        }
        for (int l = 0; l < c; ++l) {
            Int q = floor_div(h.at(r, l), h.at(r, c));
            if (q != 0) {
                detail::add_column_multiple(h, l, c, -q);
                detail::add_column_multiple(u, l, c, -q);
            }
        }
        ++c;
    }
    res.rank = c;
    return res;
}

struct KernelBasis {
    std::vector<IntVector> vectors;  // independent, saturated
};

// Canonical basis of the full integer kernel lattice {x : A*x = 0}.
// The raw basis comes from the HNF transform; a second HNF pass over the
// basis matrix makes the output deterministic.
inline KernelBasis kernel_basis(const IntMatrix& a) {
    HermiteResult hr = hermite_normal_form(a);
    std::vector<IntVector> raw;
    for (int j = hr.rank; j < a.cols; ++j) raw.push_back(hr.u.column(j));
    KernelBasis kb;
    if (raw.empty()) return kb;
    HermiteResult canon = hermite_normal_form(IntMatrix::from_columns(raw));
    for (int j = 0; j < canon.rank; ++j) kb.vectors.push_back(canon.h.column(j));
    return kb;
}

inline int rank_over_rationals(const IntMatrix& a) {
    return hermite_normal_form(a).rank;
}

// Bareiss fraction-free determinant (square matrices).
inline Int determinant(const IntMatrix& a) {
    assert(a.rows == a.cols);
    int n = a.rows;
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace finorb::lattice
