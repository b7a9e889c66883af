#pragma once

// Independent evidence generators: limits of vectors along one-parameter
// curves in normal form, standard vectors on faces, torus-orbit equivalence
// of value tuples, a sampling survey that estimates the number of orbit
// classes, and a brute-force admissible-face search. These do not reuse the
// criterion's face logic; they exist to confront it.

#include <finorb/criterion.hpp>
#include <finorb/gaussian.hpp>
#include <finorb/geometry.hpp>
#include <finorb/lattice.hpp>

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

namespace finorb::oracle {

using criterion::ComponentSpec;
using criterion::Mode;
using criterion::ProblemSpec;

// One-parameter subgroup curve in normal form:
//   ( t^{r_1}, ..., t^{r_k}, [[t^p, c*h(t)*t^q], [0, t^{-p}]] ).
// When c != 0 the normal form requires q < -p, h(0) = -1 and
// deg h < -p - q; when c = 0 the off-diagonal entry vanishes and q, h are
// ignored.
struct CurveSpec {
    IntVector r;  // length k
    Int p = 0;
    Int q = 0;
    GaussianRational c;
    std::vector<GaussianRational> h;  // coefficients, constant term first
};

namespace detail {

inline std::vector<GaussianRational> trimmed(const std::vector<GaussianRational>& h) {
    std::vector<GaussianRational> t = h;
    while (!t.empty() && t.back().is_zero()) t.pop_back();
    return t;
}

inline bool is_minus_one(const std::vector<GaussianRational>& h) {
    std::vector<GaussianRational> t = trimmed(h);
    return t.size() == 1 && t[0] == GaussianRational(Rat(-1), Rat(0));
}

}  // namespace detail

inline void validate(const CurveSpec& curve, int k) {
    if (static_cast<int>(curve.r.size()) != k)
        throw input_error("curve: torus exponent count differs from k");
    if (!curve.c.is_zero()) {
        if (!(curve.q < -curve.p))
            throw input_error("curve: nonzero c requires q < -p");
        std::vector<GaussianRational> t = detail::trimmed(curve.h);
        if (t.empty() || t[0] != GaussianRational(Rat(-1), Rat(0)))
            throw input_error("curve: nonzero c requires h(0) = -1");
        if (static_cast<Int>(t.size()) - 1 >= -curve.p - curve.q)
            throw input_error("curve: deg h must be below -p-q");
    }
}

// The limit of each component is either zero, a monomial, or (only when the
// curve is a plain torus element) the component itself.
struct MonomialEntry {
    GaussianRational coeff;
    int x_exp = 0;
    int y_exp = 0;
};

struct FormEntry {
    int x_power = 0;  // multiplies prod (a*x + y)^mult
    std::vector<std::pair<GaussianRational, int>> factors;
};

using LimitEntry = std::variant<std::monostate, MonomialEntry, FormEntry>;

// Cases 5-7 only reach their limit after rescaling by fractional powers of
// `base`; the unrescaled limit is returned together with this record. The
// rescaled coefficient of component i drops the base^{mult_i} factor.
struct RescaleInfo {
    GaussianRational base;
    Int exponent_denominator = 1;
};

struct LimitVector {
    int case_id = 0;              // 1..7
    bool divergent = false;       // affine mode only
    std::vector<Int> exponents;   // raw t-exponent per component
    std::vector<LimitEntry> entries;
    std::optional<RescaleInfo> rescale;
};

// Product over the roots other than d of (a - d)^{e(a)}; the coefficient a
// standard vector carries on component i.
inline GaussianRational root_product(const ComponentSpec& comp, const GaussianRational& d) {
    GaussianRational v = gauss_one();
    for (const auto& [a, e] : comp.roots)
        if (a != d) v = v * pow(a - d, e);
    return v;
}

inline LimitVector curve_limit(const ProblemSpec& spec, const CurveSpec& curve,
                               bool projective) {
    criterion::validate(spec);
    validate(curve, spec.k);

    LimitVector out;
    const Int& p = curve.p;
    const Int& q = curve.q;
    bool c_zero = curve.c.is_zero();

    if (c_zero) {
        out.case_id = p == 0 ? 1 : (p > 0 ? 2 : 3);
    } else if (p == q) {
        out.case_id = detail::is_minus_one(curve.h) ? 4 : 5;
    } else {
        out.case_id = p > q ? 6 : 7;
    }

    // Lowest positive-degree coefficient of h, for case 5.
    Int l = 0;
    GaussianRational hl;
    if (out.case_id == 5) {
        std::vector<GaussianRational> t = detail::trimmed(curve.h);
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!t[i].is_zero()) {
                l = static_cast<Int>(i);
                hl = t[i];
                break;
            }
    }

    IntVector rp = curve.r;
    rp.push_back(p);

    std::vector<Int> exps;
    std::vector<LimitEntry> vals;
    GaussianRational zero_root(Rat(0), Rat(0));
    for (const ComponentSpec& comp : spec.components) {
        IntVector chi = comp.character;
        chi.push_back(comp.degree);
        Int base_exp = dot(chi, rp);
        int e_inf = comp.total_multiplicity();
        int e_zero = comp.root_multiplicity(zero_root);
        int e_c = comp.root_multiplicity(curve.c);

        Int exp;
        LimitEntry entry;
        switch (out.case_id) {
            case 1: {
                exp = base_exp;
                FormEntry f;
                f.x_power = comp.degree - e_inf;
                for (const auto& [a, e] : comp.roots) f.factors.emplace_back(a, e);
                entry = std::move(f);
                break;
            }
            case 2:
                exp = base_exp - 2 * p * e_inf;
                entry = MonomialEntry{gauss_one(), comp.degree - e_inf, e_inf};
                break;
            case 3:
                exp = base_exp - 2 * p * e_zero;
                entry = MonomialEntry{root_product(comp, zero_root), comp.degree - e_zero,
                                      e_zero};
                break;
            case 4:
                exp = base_exp - 2 * p * e_c;
                entry = MonomialEntry{root_product(comp, curve.c), comp.degree - e_c, e_c};
                break;
            case 5:
                exp = base_exp + l * e_c;
                entry = MonomialEntry{pow(curve.c * hl, e_c) * root_product(comp, curve.c),
                                      comp.degree, 0};
                break;
            case 6:
                exp = base_exp + (q - p) * e_inf;
                entry = MonomialEntry{pow(-curve.c, e_inf), comp.degree, 0};
                break;
            case 7:
                exp = base_exp + (q - p) * e_zero;
                entry = MonomialEntry{pow(-curve.c, e_zero) * root_product(comp, zero_root),
                                      comp.degree, 0};
                break;
        }
        exps.push_back(exp);
        vals.push_back(std::move(entry));
    }

    out.exponents = exps;
    if (out.case_id == 5) out.rescale = RescaleInfo{curve.c * hl, l};
    if (out.case_id == 6 || out.case_id == 7) out.rescale = RescaleInfo{-curve.c, q - p};

    Int shift = 0;
    if (projective) {
        shift = *std::min_element(exps.begin(), exps.end());
    } else {
        for (const Int& e : exps)
            if (e < 0) {
                out.divergent = true;
                out.entries.assign(spec.components.size(), LimitEntry{});
                return out;
            }
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] - shift > 0)
            out.entries.emplace_back();  // component tends to zero
        else
            out.entries.push_back(std::move(vals[i]));
    }
    return out;
}

struct StandardVector {
    std::vector<int> face;             // sorted component indices
    GaussianRational d;                // sampled non-root value
    std::vector<GaussianRational> values;  // root_product per face component
};

// The coefficient tuple of the face limit along a case-4 curve through d:
// component i contributes prod_{a != d} (a - d)^{e_i(a)} on x^{n_i}.
inline StandardVector standard_vector(const ProblemSpec& spec, const std::vector<int>& face,
                                      const GaussianRational& d) {
    criterion::validate(spec);
    StandardVector sv;
    sv.face = face;
    std::sort(sv.face.begin(), sv.face.end());
    sv.d = d;
    for (int i : sv.face) {
        if (i < 0 || i >= static_cast<int>(spec.components.size()))
            throw input_error("standard_vector: index out of range");
        if (spec.components[i].root_multiplicity(d) > 0)
            throw input_error("standard_vector: d is a root of a face component");
        sv.values.push_back(root_product(spec.components[i], d));
    }
    return sv;
}

// Two tuples lie in the same torus orbit iff every monomial invariant agrees:
// prod x_i^{beta_i} = prod y_i^{beta_i} for each kernel basis vector beta of
// the character matrix. `homogenize` appends a row of ones (projective
// scaling).
inline bool torus_equivalent(const std::vector<GaussianRational>& x,
                             const std::vector<GaussianRational>& y,
                             const lattice::IntMatrix& characters, bool homogenize) {
    if (x.size() != y.size() || static_cast<int>(x.size()) != characters.cols)
        throw input_error("torus_equivalent: size mismatch");
    for (const GaussianRational& v : x)
        if (v.is_zero()) throw input_error("torus_equivalent: zero entry");
    for (const GaussianRational& v : y)
        if (v.is_zero()) throw input_error("torus_equivalent: zero entry");

    lattice::IntMatrix m = characters;
    if (homogenize) {
        lattice::IntMatrix m2(characters.rows + 1, characters.cols);
        for (int i = 0; i < characters.rows; ++i)
            for (int j = 0; j < characters.cols; ++j) m2.at(i, j) = characters.at(i, j);
        for (int j = 0; j < characters.cols; ++j) m2.at(characters.rows, j) = 1;
        m = std::move(m2);
    }
    auto monomial = [](const std::vector<GaussianRational>& v, const IntVector& beta) {
        GaussianRational r = gauss_one();
        for (std::size_t i = 0; i < v.size(); ++i)
            r = r * pow(v[i], static_cast<long>(beta[i]));
        return r;
    };
    for (const IntVector& beta : lattice::kernel_basis(m).vectors)
        if (monomial(x, beta) != monomial(y, beta)) return false;
    return true;
}

struct SurveyResult {
    int classes = 0;
    bool infinite_evidence = false;  // at least two classes
    std::vector<StandardVector> samples;
};

// First `size` positive integers that are not roots of any face component.
inline std::vector<GaussianRational> default_sample(const ProblemSpec& spec,
                                                    const std::vector<int>& face,
                                                    int size = 8) {
    std::vector<GaussianRational> sample;
    for (long d = 1; static_cast<int>(sample.size()) < size; ++d) {
        GaussianRational g(Rat(d), Rat(0));
        bool is_root = false;
        for (int i : face)
            if (spec.components[i].root_multiplicity(g) > 0) is_root = true;
        if (!is_root) sample.push_back(g);
    }
    return sample;
}

// Partitions the standard vectors of the sampled values into torus classes.
// Two or more classes certify infinitely many orbits; one class is evidence
// (not proof) of finiteness.
inline SurveyResult sample_survey(const ProblemSpec& spec, const std::vector<int>& face,
                                  const std::vector<GaussianRational>& sample) {
    criterion::validate(spec);
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j)
            if (sample[i] == sample[j]) throw input_error("sample_survey: repeated sample");

    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    lattice::IntMatrix characters = criterion::detail::face_matrix(
        spec, sorted, false);
    bool homogenize = spec.mode == Mode::projective;

    SurveyResult res;
    std::vector<std::vector<GaussianRational>> reps;
    for (const GaussianRational& d : sample) {
        StandardVector sv = standard_vector(spec, sorted, d);
        bool matched = false;
        for (const auto& rep : reps)
            if (torus_equivalent(sv.values, rep, characters, homogenize)) {
                matched = true;
                break;
            }
        if (!matched) reps.push_back(sv.values);
        res.samples.push_back(std::move(sv));
    }
    res.classes = static_cast<int>(reps.size());
    res.infinite_evidence = res.classes >= 2;
    return res;
}

// Inclusion-maximal admissible subsets found by exhausting all 2^s subsets
// against the admissibility LP. The reference for the face machinery.
inline std::vector<std::vector<int>> brute_force_admissible(
    const std::vector<geometry::CharPoint>& points, bool lifted) {
    std::size_t s = points.size();
    if (s > 12) throw input_error("brute_force_admissible: more than 12 points");
    std::vector<std::vector<int>> feasible;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (1u << i)) subset.push_back(static_cast<int>(i));
        if (geometry::admissible_normal(points, subset, lifted)) feasible.push_back(subset);
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& f : feasible) {
        bool contained = false;
        for (const auto& g : feasible)
            if (f.size() < g.size() && std::includes(g.begin(), g.end(), f.begin(), f.end()))
                contained = true;
        if (!contained) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace finorb::oracle
