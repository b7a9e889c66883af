#pragma once

// The finiteness criterion: an orbit closure decomposes into finitely many
// orbits iff on every inclusion-maximal admissible face the root
// multiplicities are annihilated by the whole character kernel. Affine
// problems use the cone of characteristic points directly; projective ones
// homogenize the characters with a leading 1 (lift route) or work with
// argmin faces of the point polytope (direct route, cross-check only).

#include <finorb/gaussian.hpp>
#include <finorb/geometry.hpp>
#include <finorb/lattice.hpp>
#include <finorb/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace finorb::criterion {

enum class Mode { affine, projective };

inline std::string mode_name(Mode m) { return m == Mode::affine ? "affine" : "projective"; }

// One summand: a character of the torus factor, the degree of the binary
// form, and the multiplicity of each root (the coefficient of x in the root
// factor a*x + y). Roots sum to at most the degree; the remaining power
// falls on x.
struct ComponentSpec {
    IntVector character;                  // length k
    int degree = 0;                       // n_i >= 0
    std::map<GaussianRational, int> roots;  // value -> multiplicity >= 1

    int root_multiplicity(const GaussianRational& a) const {
        auto it = roots.find(a);
        return it == roots.end() ? 0 : it->second;
    }
    int total_multiplicity() const {
        int t = 0;
        for (const auto& [a, e] : roots) t += e;
        return t;
    }
};

struct ProblemSpec {
    int k = 0;
    Mode mode = Mode::affine;
    std::vector<ComponentSpec> components;
};

inline void validate(const ProblemSpec& spec) {
    if (spec.k < 0) throw input_error("k must be nonnegative");
    if (spec.components.empty()) throw input_error("component list is empty");
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const ComponentSpec& c = spec.components[i];
        std::string where = "components[" + std::to_string(i) + "]";
        if (static_cast<int>(c.character.size()) != spec.k)
            throw input_error(where + ": character length differs from k");
        if (c.degree < 0) throw input_error(where + ": negative degree");
        for (const auto& [a, e] : c.roots)
            if (e <= 0) throw input_error(where + ": nonpositive root multiplicity");
        if (c.total_multiplicity() > c.degree)
            throw input_error(where + ": root multiplicities exceed the degree");
    }
}

inline std::vector<geometry::CharPoint> char_points(const ProblemSpec& spec) {
    std::vector<geometry::CharPoint> pts;
    pts.reserve(spec.components.size());
    for (std::size_t i = 0; i < spec.components.size(); ++i)
        pts.push_back({spec.components[i].character, spec.components[i].degree,
                       static_cast<int>(i)});
    return pts;
}

struct Violation {
    IntVector beta;          // kernel vector over the face components
    GaussianRational root;   // value a with sum e_i(a)*beta_i != 0
    Int value;               // the nonzero sum
};

struct FaceReport {
    geometry::Face face;
    std::vector<IntVector> kernel;  // canonical basis, vectors over face indices
    std::optional<Violation> violation;
};

struct Verdict {
    bool finite = true;
    int modality = 0;  // 1 - finite
    std::vector<FaceReport> reports;
    std::optional<Violation> witness;       // first violation in report order
    std::optional<std::vector<int>> witness_face;
};

namespace detail {

// Character matrix over the face, one column per face component; projective
// mode appends a row of ones (the lift's extra character coordinate).
inline lattice::IntMatrix face_matrix(const ProblemSpec& spec, const std::vector<int>& face,
                                      bool ones_row) {
    int rows = spec.k + (ones_row ? 1 : 0);
    lattice::IntMatrix m(rows, static_cast<int>(face.size()));
    for (std::size_t j = 0; j < face.size(); ++j) {
        const ComponentSpec& c = spec.components[face[j]];
        for (int i = 0; i < spec.k; ++i) m.at(i, static_cast<int>(j)) = c.character[i];
        if (ones_row) m.at(spec.k, static_cast<int>(j)) = 1;
    }
    return m;
}

inline std::vector<GaussianRational> face_root_values(const ProblemSpec& spec,
                                                      const std::vector<int>& face) {
    std::set<GaussianRational> vals;
    for (int i : face)
        for (const auto& [a, e] : spec.components[i].roots) vals.insert(a);
    return {vals.begin(), vals.end()};
}

}  // namespace detail

// Checks the multiplicity condition on one face: every kernel vector beta of
// the face's character matrix must satisfy sum_i e_i(a) beta_i = 0 for every
// root value a. A basis check suffices; the condition is linear in beta.
inline FaceReport face_condition(const ProblemSpec& spec, const std::vector<int>& face) {
    for (int i : face)
        if (i < 0 || i >= static_cast<int>(spec.components.size()))
            throw input_error("face_condition: index out of range");
    FaceReport rep;
    rep.face.indices = face;
    std::sort(rep.face.indices.begin(), rep.face.indices.end());
    {
        std::vector<IntVector> sub;
        for (int i : rep.face.indices) {
            IntVector v = spec.components[i].character;
            v.push_back(spec.components[i].degree);
            sub.push_back(std::move(v));
        }
        rep.face.dim = geometry::detail::rank_of(sub);
    }

    lattice::IntMatrix m =
        detail::face_matrix(spec, rep.face.indices, spec.mode == Mode::projective);
    rep.kernel = lattice::kernel_basis(m).vectors;

    std::vector<GaussianRational> roots = detail::face_root_values(spec, rep.face.indices);
    for (const IntVector& beta : rep.kernel) {
        for (const GaussianRational& a : roots) {
            Int sum = 0;
            for (std::size_t j = 0; j < rep.face.indices.size(); ++j)
                sum += Int(spec.components[rep.face.indices[j]].root_multiplicity(a)) * beta[j];
            if (sum != 0) {
                rep.violation = Violation{beta, a, sum};
                return rep;
            }
        }
    }
    return rep;
}

namespace detail {

inline Verdict assemble(const ProblemSpec& spec, const std::vector<geometry::Face>& faces) {
    Verdict v;
    for (const geometry::Face& f : faces) {
        FaceReport rep = face_condition(spec, f.indices);
        rep.face = f;
        if (rep.violation && !v.witness) {
            v.witness = rep.violation;
            v.witness_face = f.indices;
        }
        v.reports.push_back(std::move(rep));
    }
    v.finite = !v.witness.has_value();
    v.modality = v.finite ? 0 : 1;
    return v;
}

}  // namespace detail

inline Verdict decide_affine(const ProblemSpec& spec) {
    validate(spec);
    if (spec.mode != Mode::affine) throw input_error("decide_affine: spec is not affine");
    std::vector<geometry::Face> faces =
        geometry::maximal_admissible_faces(char_points(spec), false);
    return detail::assemble(spec, faces);
}

enum class Route { lift, direct };

inline Verdict decide_projective(const ProblemSpec& spec, Route route = Route::lift) {
    validate(spec);
    if (spec.mode != Mode::projective)
        throw input_error("decide_projective: spec is not projective");
    if (route == Route::lift) {
        std::vector<geometry::Face> faces =
            geometry::maximal_admissible_faces(char_points(spec), true);
        return detail::assemble(spec, faces);
    }
    // Direct route: argmin faces of the point polytope, by subset enumeration
    // over the offset LP. Cross-check mode, desk scale only.
    std::size_t s = spec.components.size();
    if (s > 16) throw input_error("decide_projective: direct route limited to 16 components");
    std::vector<geometry::CharPoint> pts = char_points(spec);
    std::vector<geometry::Face> admissible;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (1u << i)) subset.push_back(static_cast<int>(i));
        std::optional<IntVector> n = geometry::admissible_offset_normal(pts, subset);
        if (!n) continue;
        geometry::Face f;
        f.indices = subset;
        f.normal = std::move(n);
        std::vector<IntVector> sub;
        for (int i : subset) sub.push_back(pts[i].coords());
        f.dim = geometry::detail::rank_of(sub);
        admissible.push_back(std::move(f));
    }
    std::vector<geometry::Face> maximal;
    for (const geometry::Face& f : admissible) {
        bool contained = false;
        for (const geometry::Face& g : admissible)
            if (f.indices.size() < g.indices.size() &&
                std::includes(g.indices.begin(), g.indices.end(), f.indices.begin(),
                              f.indices.end())) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    return detail::assemble(spec, maximal);
}

inline Verdict decide(const ProblemSpec& spec, Route route = Route::lift) {
    return spec.mode == Mode::affine ? decide_affine(spec) : decide_projective(spec, route);
}

// Orbit modality of the closure: 0 when finitely many orbits, else 1.
inline int modality(const ProblemSpec& spec) {
    return decide(spec).finite ? 0 : 1;
}

struct ModuleVerdict {
    bool always_finite = true;
    std::optional<geometry::Face> witness_face;  // dependent characters here
};

// Whether every vector of the module has a finite-orbit closure: on each
// maximal admissible face the characters of the components with nonzero
// degree (homogenized in projective mode) must be linearly independent.
inline ModuleVerdict module_always_finite(const ProblemSpec& spec) {
    validate(spec);
    bool lifted = spec.mode == Mode::projective;
    std::vector<geometry::Face> faces =
        geometry::maximal_admissible_faces(char_points(spec), lifted);
    for (const geometry::Face& f : faces) {
        std::vector<IntVector> cols;
        for (int i : f.indices) {
            if (spec.components[i].degree == 0) continue;
            IntVector c = spec.components[i].character;
            if (lifted) c.insert(c.begin(), Int(1));
            cols.push_back(std::move(c));
        }
        if (cols.empty()) continue;
        lattice::IntMatrix m = lattice::IntMatrix::from_columns(cols);
        if (lattice::rank_over_rationals(m) != static_cast<int>(cols.size()))
            return {false, f};
    }
    return {true, std::nullopt};
}

// Builds a vector witnessing infinitely many orbits from a dependent face:
// a single root at 0 with multiplicity 1 on one face component where beta is
// nonzero. The resulting spec is guaranteed to be judged infinite.
inline ProblemSpec witness_vector(const ProblemSpec& spec, const std::vector<int>& face,
                                  const IntVector& beta) {
    validate(spec);
    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (beta.size() != sorted.size())
        throw input_error("witness_vector: beta length differs from face size");
    bool lifted = spec.mode == Mode::projective;
    if (!geometry::admissible_normal(char_points(spec), sorted, lifted))
        throw input_error("witness_vector: face is not admissible");
    lattice::IntMatrix m = detail::face_matrix(spec, sorted, lifted);
    IntVector image = m.apply(beta);
    if (!std::all_of(image.begin(), image.end(), [](const Int& x) { return x == 0; }))
        throw input_error("witness_vector: beta is not in the character kernel");

    int pick = -1;
    for (std::size_t j = 0; j < sorted.size(); ++j)
        if (beta[j] != 0 && spec.components[sorted[j]].degree >= 1) {
            pick = sorted[j];
            break;
        }
    if (pick < 0)
        throw input_error(
            "witness_vector: no face component with nonzero beta and positive degree");

    ProblemSpec out = spec;
    for (ComponentSpec& c : out.components) c.roots.clear();
    out.components[pick].roots[GaussianRational(Rat(0), Rat(0))] = 1;
    return out;
}

}  // namespace finorb::criterion
