#pragma once

// Convex geometry of characteristic points: the cone they span, its faces
// as index sets, and admissible faces (faces carrying a supporting normal
// with negative last coordinate). Projective problems are handled through
// the same cone code by homogenizing each point with a leading 1; the
// polytope reading survives as an offset-variable variant of the same LP
// used as a cross-check.

#include <finorb/feasibility.hpp>
#include <finorb/lattice.hpp>
#include <finorb/rational.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace finorb::geometry {

struct CharPoint {
    IntVector character;  // length k (or k+1 once lifted)
    int degree = 0;       // >= 0
    int index = 0;        // position in the component list

    IntVector coords() const {
        IntVector v = character;
        v.push_back(degree);
        return v;
    }
};

struct Face {
    std::vector<int> indices;            // sorted point indices
    std::optional<IntVector> normal;     // admissible witness, primitive integer
    int dim = 0;                         // rank of the linear span of the points

    friend bool operator==(const Face& a, const Face& b) { return a.indices == b.indices; }
    friend bool operator<(const Face& a, const Face& b) { return a.indices < b.indices; }
};

struct DualCone {
    std::vector<IntVector> normals;    // generators of the dual cone, lex sorted
    std::vector<IntVector> lineality;  // basis of the dual cone's lineality space
};

namespace detail {

inline std::vector<IntVector> integer_rows(const std::vector<RationalVector>& rows) {
    std::vector<IntVector> out;
    out.reserve(rows.size());
    for (const RationalVector& r : rows) out.push_back(primitive_integer_vector(r));
    return out;
}

inline IntVector lift(const CharPoint& p) {
    IntVector v;
    v.reserve(p.character.size() + 2);
    v.push_back(1);
    for (const Int& c : p.character) v.push_back(c);
    v.push_back(p.degree);
    return v;
}

inline std::vector<IntVector> point_vectors(const std::vector<CharPoint>& points, bool lifted) {
    std::vector<IntVector> v;
    v.reserve(points.size());
    for (const CharPoint& p : points) v.push_back(lifted ? lift(p) : p.coords());
    return v;
}

inline int rank_of(const std::vector<IntVector>& vecs) {
    if (vecs.empty()) return 0;
    return lattice::rank_over_rationals(lattice::IntMatrix::from_rows(vecs));
}

}  // namespace detail

// Generators of the dual cone {N : <g,N> >= 0 for all g}: the facet normals
// of the primal cone plus both signs of the dual's lineality basis (the
// orthogonal complement of the generators' span). Every supporting normal is
// a nonnegative combination of the returned vectors.
inline DualCone dual_cone(const std::vector<RationalVector>& generators, int dim) {
    for (const RationalVector& g : generators)
        if (static_cast<int>(g.size()) != dim)
            throw input_error("dual_cone: generator length differs from dimension");
    if (generators.size() > 20) throw input_error("dual_cone: too many generators");

    std::vector<IntVector> gens = detail::integer_rows(generators);
    DualCone out;

    lattice::IntMatrix rows = gens.empty() ? lattice::IntMatrix(0, dim)
                                           : lattice::IntMatrix::from_rows(gens);
    lattice::KernelBasis lin = lattice::kernel_basis(rows);
    out.lineality = lin.vectors;

    int r = detail::rank_of(gens);
    std::set<IntVector> normals;
    for (const IntVector& l : out.lineality) {
        normals.insert(l);
        IntVector neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        normals.insert(neg);
    }

    // Facet normals: for each generator subset of rank r-1, the span of the
    // generators meets the subset's orthogonal complement in a line.
    int s = static_cast<int>(gens.size());
    if (r >= 1) {
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            std::vector<IntVector> sub;
            for (int i = 0; i < s; ++i)
                if (mask & (1u << i)) sub.push_back(gens[i]);
            if (detail::rank_of(sub) != r - 1) continue;

            lattice::KernelBasis perp = lattice::kernel_basis(
                sub.empty() ? lattice::IntMatrix(0, dim) : lattice::IntMatrix::from_rows(sub));
            // Cut down to the generators' span: kernel vectors orthogonal to
            // the whole lineality space of the dual.
            lattice::IntMatrix cross(static_cast<int>(out.lineality.size()),
                                     static_cast<int>(perp.vectors.size()));
            for (int i = 0; i < cross.rows; ++i)
                for (int j = 0; j < cross.cols; ++j)
                    cross.at(i, j) = dot(out.lineality[i], perp.vectors[j]);
            lattice::KernelBasis mix = lattice::kernel_basis(cross);
            if (mix.vectors.size() != 1) continue;

            IntVector n(dim, Int(0));
            for (std::size_t j = 0; j < perp.vectors.size(); ++j)
                for (int v = 0; v < dim; ++v) n[v] += mix.vectors[0][j] * perp.vectors[j][v];
            n = primitive_integer_vector(n);

            bool nonneg = true, nonpos = true;
            for (const IntVector& g : gens) {
                Int d = dot(g, n);
                if (d < 0) nonneg = false;
                if (d > 0) nonpos = false;
            }
            if (!nonneg && !nonpos) continue;
            if (!nonneg)
                for (Int& v : n) v = -v;
            normals.insert(n);
        }
    }
    out.normals.assign(normals.begin(), normals.end());
    return out;
}

// All faces of the cone spanned by the points, as index sets: exact zero
// sets of nonzero supporting normals. Closed under intersection. The empty
// face appears iff some supporting normal is positive on every point; the
// improper face (all indices) iff the points do not span the ambient space.
inline std::vector<Face> enumerate_faces(const std::vector<CharPoint>& points) {
    if (points.empty()) throw input_error("enumerate_faces: no points");
    int dim = static_cast<int>(points[0].character.size()) + 1;
    std::vector<IntVector> vecs = detail::point_vectors(points, false);
    std::vector<RationalVector> gens;
    for (const IntVector& v : vecs) gens.emplace_back(v.begin(), v.end());

    DualCone dual = dual_cone(gens, dim);
    std::set<std::vector<int>> sets;
    for (const IntVector& n : dual.normals) {
        std::vector<int> z;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (dot(vecs[i], n) == 0) z.push_back(static_cast<int>(i));
        sets.insert(z);
    }
    // Close under pairwise intersection.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                      cur[j].end(), std::back_inserter(inter));
                if (sets.insert(inter).second) grew = true;
            }
    }

    std::vector<Face> faces;
    for (const std::vector<int>& s : sets) {
        Face f;
        f.indices = s;
        std::vector<IntVector> sub;
        for (int i : s) sub.push_back(vecs[i]);
        f.dim = detail::rank_of(sub);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

// Supporting normal R with last coordinate <= -1 vanishing exactly on the
// subset and >= 1 on every other point, canonicalized to a primitive integer
// vector; nullopt if none exists. `lifted` homogenizes the points first.
inline std::optional<IntVector> admissible_normal(const std::vector<CharPoint>& points,
                                                  const std::vector<int>& subset,
                                                  bool lifted) {
    std::vector<IntVector> vecs = detail::point_vectors(points, lifted);
    int dim = vecs.empty() ? 0 : static_cast<int>(vecs[0].size());
    std::vector<bool> in(points.size(), false);
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(points.size()))
            throw input_error("admissible_normal: subset index out of range");
        in[i] = true;
    }

    std::vector<LinearConstraint> sys;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        RationalVector c(vecs[i].begin(), vecs[i].end());
        if (in[i])
            sys.push_back(LinearConstraint::eq(std::move(c), Rat(0)));
        else
            sys.push_back(LinearConstraint::ge(std::move(c), Rat(1)));
    }
    RationalVector last(dim, Rat(0));
    last[dim - 1] = -1;
    sys.push_back(LinearConstraint::ge(std::move(last), Rat(1)));

    std::optional<RationalVector> sol = feasible_point(sys, dim);
    if (!sol) return std::nullopt;
    return primitive_integer_vector(*sol);
}

// Offset-variable variant for the polytope reading: R with last coordinate
// <= -1 whose inner products attain their strict minimum exactly on the
// subset. Returns the equivalent lifted normal (-offset, R).
inline std::optional<IntVector> admissible_offset_normal(const std::vector<CharPoint>& points,
                                                         const std::vector<int>& subset) {
    std::vector<IntVector> vecs = detail::point_vectors(points, false);
    int dim = vecs.empty() ? 0 : static_cast<int>(vecs[0].size());
    int vars = dim + 1;  // R then the offset m
    std::vector<bool> in(points.size(), false);
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(points.size()))
            throw input_error("admissible_offset_normal: subset index out of range");
        in[i] = true;
    }

    std::vector<LinearConstraint> sys;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        RationalVector c(vars, Rat(0));
        for (int v = 0; v < dim; ++v) c[v] = Rat(vecs[i][v]);
        c[dim] = -1;
        if (in[i])
            sys.push_back(LinearConstraint::eq(std::move(c), Rat(0)));
        else
            sys.push_back(LinearConstraint::ge(std::move(c), Rat(1)));
    }
    RationalVector last(vars, Rat(0));
    last[dim - 1] = -1;
    sys.push_back(LinearConstraint::ge(std::move(last), Rat(1)));

    std::optional<RationalVector> sol = feasible_point(sys, vars);
    if (!sol) return std::nullopt;
    RationalVector lifted(dim + 1);
    lifted[0] = -(*sol)[dim];
    for (int v = 0; v < dim; ++v) lifted[v + 1] = (*sol)[v];
    return primitive_integer_vector(lifted);
}

// Inclusion-maximal admissible faces with witness normals attached.
inline std::vector<Face> maximal_admissible_faces(const std::vector<CharPoint>& points,
                                                  bool lifted) {
    std::vector<CharPoint> pts = points;
    if (lifted)
        for (CharPoint& p : pts) {
            p.character.insert(p.character.begin(), Int(1));
        }
    std::vector<Face> all = enumerate_faces(pts);
    std::vector<Face> admissible;
    for (Face& f : all) {
        std::optional<IntVector> n = admissible_normal(pts, f.indices, false);
        if (n) {
            f.normal = std::move(n);
            admissible.push_back(f);
        }
    }
    std::vector<Face> maximal;
    for (const Face& f : admissible) {
        bool contained = false;
        for (const Face& g : admissible) {
            if (f.indices.size() >= g.indices.size() || f == g) continue;
            if (std::includes(g.indices.begin(), g.indices.end(), f.indices.begin(),
                              f.indices.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace finorb::geometry
