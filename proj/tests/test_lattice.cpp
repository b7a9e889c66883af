#include "catch_amalgamated.hpp"
#include "test_support.hpp"

#include <finorb/lattice.hpp>

using namespace finorb;
using lattice::IntMatrix;
using testsupport::Rng;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
    IntMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Int s = 0;
            for (int l = 0; l < a.cols; ++l) s += a.at(i, l) * b.at(l, j);
            c.at(i, j) = s;
        }
    return c;
}

bool annihilates(const IntMatrix& a, const IntVector& v) {
    for (int i = 0; i < a.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * v[j];
        if (s != 0) return false;
    }
    return true;
}

// Exhaustive small kernel members, the reference the basis must span.
std::vector<IntVector> brute_kernel_members(const IntMatrix& a, int mag, std::size_t cap) {
    std::vector<IntVector> found;
    IntVector v(a.cols, Int(-mag));
    while (true) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (!zero && annihilates(a, v)) {
            found.push_back(v);
            if (found.size() >= cap) return found;
        }
        int j = 0;
        while (j < a.cols && v[j] == mag) v[j++] = -mag;
        if (j == a.cols) break;
        ++v[j];
    }
    return found;
}

void check_hermite_shape(const IntMatrix& h, int rank) {
    int prev_pivot_row = -1;
    for (int j = 0; j < h.cols; ++j) {
        int pivot = -1;
        for (int i = 0; i < h.rows; ++i)
            if (h.at(i, j) != 0) { pivot = i; break; }
        if (j < rank) {
            REQUIRE(pivot > prev_pivot_row);
            REQUIRE(h.at(pivot, j) > 0);
            for (int l = 0; l < j; ++l) {
                REQUIRE(h.at(pivot, l) >= 0);
                REQUIRE(h.at(pivot, l) < h.at(pivot, j));
            }
            prev_pivot_row = pivot;
        } else {
            REQUIRE(pivot == -1);  // zero columns last
        }
    }
}

void check_membership(const std::vector<IntVector>& basis, const IntVector& member) {
    auto c = testsupport::solve_columns(basis, member);
    REQUIRE(c.has_value());
    for (const Rat& q : *c) REQUIRE(denominator(q) == 1);
}

}  // namespace

TEST_CASE("hermite form of a 1x2 row") {
    IntMatrix a = from_rows({{4, 6}});
    auto res = lattice::hermite_normal_form(a);
    REQUIRE(res.h == from_rows({{2, 0}}));
    REQUIRE(multiply(a, res.u) == res.h);
    Int det = lattice::determinant(res.u);
    REQUIRE((det == 1 || det == -1));
    REQUIRE(res.rank == 1);
}

TEST_CASE("hermite form fixes the identity") {
    IntMatrix a = IntMatrix::identity(3);
    auto res = lattice::hermite_normal_form(a);
    REQUIRE(res.h == IntMatrix::identity(3));
    REQUIRE(res.u == IntMatrix::identity(3));
}

TEST_CASE("kernel of the lifted character matrix") {
    IntMatrix a = from_rows({{2, 3, 4}, {1, 1, 1}});
    // Oracle first: exhaust small integer vectors.
    std::vector<IntVector> brute = brute_kernel_members(a, 3, 100);
    for (const IntVector& v : brute) {
        bool prop = (v == IntVector{1, -2, 1}) || (v == IntVector{-1, 2, -1}) ||
                    (v == IntVector{2, -4, 2}) || (v == IntVector{-2, 4, -2}) ||
                    (v == IntVector{3, -6, 3}) || (v == IntVector{-3, 6, -3});
        REQUIRE(prop);
    }
    auto kb = lattice::kernel_basis(a);
    REQUIRE(kb.vectors.size() == 1);
    REQUIRE(kb.vectors[0] == IntVector{1, -2, 1});
    REQUIRE(lattice::rank_over_rationals(a) == 2);
}

TEST_CASE("kernel of a single character row") {
    IntMatrix a = from_rows({{1, 2}});
    auto kb = lattice::kernel_basis(a);
    REQUIRE(kb.vectors.size() == 1);
    REQUIRE(kb.vectors[0] == IntVector{2, -1});
}

TEST_CASE("kernel of the zero row is the full lattice") {
    IntMatrix a(1, 3);
    auto kb = lattice::kernel_basis(a);
    REQUIRE(kb.vectors.size() == 3);
    IntMatrix b = IntMatrix::from_columns(kb.vectors);
    Int det = lattice::determinant(b);
    REQUIRE((det == 1 || det == -1));
}

TEST_CASE("kernel with no rows at all") {
    IntMatrix a(0, 2);
    auto kb = lattice::kernel_basis(a);
    REQUIRE(kb.vectors.size() == 2);
    REQUIRE(lattice::rank_over_rationals(a) == 0);
}

TEST_CASE("full column rank means trivial kernel") {
    IntMatrix a = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(lattice::kernel_basis(a).vectors.empty());
    REQUIRE(lattice::rank_over_rationals(a) == 3);
}

TEST_CASE("hermite and kernel invariants on random matrices") {
    Rng rng(20260814);
    for (int trial = 0; trial < 120; ++trial) {
        IntMatrix a = testsupport::random_matrix(rng, 4, 5, 6);
        auto res = lattice::hermite_normal_form(a);
        REQUIRE(multiply(a, res.u) == res.h);
        Int det = lattice::determinant(res.u);
        REQUIRE((det == 1 || det == -1));
        check_hermite_shape(res.h, res.rank);

        auto kb = lattice::kernel_basis(a);
        REQUIRE(res.rank + static_cast<int>(kb.vectors.size()) == a.cols);
        for (const IntVector& v : kb.vectors) REQUIRE(annihilates(a, v));
        if (!kb.vectors.empty()) {
            for (const IntVector& member : brute_kernel_members(a, 2, 20))
                check_membership(kb.vectors, member);
        } else {
            REQUIRE(brute_kernel_members(a, 2, 1).empty());
        }
    }
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
    IntMatrix a = from_rows({{2, 0, 1}, {1, 3, -1}, {0, 4, 2}});
    // 2*(6+4) - 0 + 1*(4-0) = 24
    REQUIRE(lattice::determinant(a) == 24);
    IntMatrix b = from_rows({{0, 1}, {1, 0}});
    REQUIRE(lattice::determinant(b) == -1);
    IntMatrix c = from_rows({{1, 2}, {2, 4}});
    REQUIRE(lattice::determinant(c) == 0);
}
