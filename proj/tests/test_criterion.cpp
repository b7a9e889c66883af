#include "catch_amalgamated.hpp"
#include "test_support.hpp"

#include <finorb/criterion.hpp>
#include <finorb/geometry.hpp>

using namespace finorb;
using criterion::ComponentSpec;
using criterion::Mode;
using criterion::ProblemSpec;
using testsupport::Rng;

namespace {

GaussianRational g(long re, long im = 0) { return GaussianRational(Rat(re), Rat(im)); }

ComponentSpec comp(std::vector<long> character, int degree,
                   std::vector<std::pair<GaussianRational, int>> roots = {}) {
    ComponentSpec c;
    c.character.assign(character.begin(), character.end());
    c.degree = degree;
    for (const auto& [a, e] : roots) c.roots[a] = e;
    return c;
}

// Five binary forms of degrees 1,4,4,3,2 under a one-dimensional torus.
ProblemSpec example_spec(Mode mode) {
    ProblemSpec spec;
    spec.k = 1;
    spec.mode = mode;
    spec.components = {comp({1}, 1, {{g(0), 1}}),
                       comp({1}, 4, {{g(0), 2}}),
                       comp({2}, 4, {{g(-1), 2}}),
                       comp({3}, 3, {{g(0), 1}, {g(-1), 1}}),
                       comp({4}, 2)};
    return spec;
}

}  // namespace

TEST_CASE("validation rejects malformed problems") {
    ProblemSpec spec;
    spec.k = 1;
    REQUIRE_THROWS_AS(criterion::validate(spec), input_error);
    spec.components = {comp({1, 2}, 1)};
    REQUIRE_THROWS_AS(criterion::validate(spec), input_error);
    spec.components = {comp({1}, 2, {{g(0), 3}})};
    REQUIRE_THROWS_AS(criterion::validate(spec), input_error);
    spec.components = {comp({1}, 2, {{g(0), 2}})};
    REQUIRE_NOTHROW(criterion::validate(spec));
    REQUIRE_THROWS_AS(criterion::decide_affine(example_spec(Mode::projective)), input_error);
    REQUIRE_THROWS_AS(criterion::decide_projective(example_spec(Mode::affine)), input_error);
}

TEST_CASE("face condition on the five-form example") {
    ProblemSpec spec = example_spec(Mode::projective);

    auto top = criterion::face_condition(spec, {2, 3, 4});
    REQUIRE(top.kernel == std::vector<IntVector>{{1, -2, 1}});
    REQUIRE(top.violation.has_value());
    REQUIRE(top.violation->beta == IntVector{1, -2, 1});
    REQUIRE(top.violation->root == g(0));
    REQUIRE(top.violation->value == -2);

    auto side = criterion::face_condition(spec, {1, 2});
    REQUIRE(side.kernel.empty());
    REQUIRE(!side.violation.has_value());
}

TEST_CASE("the five-form example has infinitely many orbits in the projective space") {
    ProblemSpec spec = example_spec(Mode::projective);
    auto verdict = criterion::decide(spec);
    REQUIRE(!verdict.finite);
    REQUIRE(verdict.modality == 1);
    REQUIRE(verdict.reports.size() == 2);
    REQUIRE(verdict.reports[0].face.indices == std::vector<int>{1, 2});
    REQUIRE(verdict.reports[1].face.indices == std::vector<int>{2, 3, 4});
    REQUIRE(verdict.witness_face == std::vector<int>{2, 3, 4});
    REQUIRE(verdict.witness->beta == IntVector{1, -2, 1});
    REQUIRE(verdict.witness->root == g(0));
    REQUIRE(verdict.witness->value == -2);
    REQUIRE(criterion::modality(spec) == 1);
}

TEST_CASE("the first linear form's root does not affect the example verdict") {
    // The linear component sits outside both admissible faces, so any root
    // (or none) leaves the whole report unchanged.
    std::vector<std::map<GaussianRational, int>> variants = {
        {}, {{g(1), 1}}, {{g(-5), 1}}, {{g(0, 1), 1}}};
    for (const auto& roots : variants) {
        ProblemSpec spec = example_spec(Mode::projective);
        spec.components[0].roots = roots;
        auto verdict = criterion::decide(spec);
        REQUIRE(!verdict.finite);
        REQUIRE(verdict.witness_face == std::vector<int>{2, 3, 4});
        REQUIRE(verdict.witness->beta == IntVector{1, -2, 1});
        REQUIRE(verdict.witness->value == -2);
    }
}

TEST_CASE("the five-form example is finite in the affine space") {
    ProblemSpec spec = example_spec(Mode::affine);
    auto verdict = criterion::decide(spec);
    REQUIRE(verdict.finite);
    REQUIRE(verdict.modality == 0);
    REQUIRE(verdict.reports.size() == 1);
    REQUIRE(verdict.reports[0].face.indices == std::vector<int>{1});
}

TEST_CASE("proportional characters with mismatched roots give infinitely many orbits") {
    ProblemSpec spec;
    spec.k = 1;
    spec.mode = Mode::affine;
    spec.components = {comp({1}, 1, {{g(0), 1}}), comp({2}, 2)};
    auto verdict = criterion::decide(spec);
    REQUIRE(!verdict.finite);
    REQUIRE(verdict.witness_face == std::vector<int>{0, 1});
    REQUIRE(verdict.witness->beta == IntVector{2, -1});
    REQUIRE(verdict.witness->root == g(0));
    REQUIRE(verdict.witness->value == 2);
}

TEST_CASE("torusless pairs are decided by their top-degree root patterns") {
    ProblemSpec spec;
    spec.k = 0;
    spec.mode = Mode::projective;

    // x*y^2 against x^2*y: same degree, different root orders.
    spec.components = {comp({}, 3, {{g(0), 2}}), comp({}, 3, {{g(0), 1}})};
    REQUIRE(!criterion::decide(spec).finite);

    // x*y^2 against x*y: the lower degree drops out of the face.
    spec.components = {comp({}, 3, {{g(0), 2}}), comp({}, 2, {{g(0), 1}})};
    REQUIRE(criterion::decide(spec).finite);

    // Equal forms.
    spec.components = {comp({}, 3, {{g(0), 2}}), comp({}, 3, {{g(0), 2}})};
    REQUIRE(criterion::decide(spec).finite);
}

TEST_CASE("a single form always has a finite closure") {
    Rng rng(201);
    testsupport::SpecParams par;
    par.components_max = 1;
    for (int trial = 0; trial < 30; ++trial) {
        par.mode = trial % 2 == 0 ? Mode::affine : Mode::projective;
        auto spec = testsupport::random_spec(rng, par);
        auto verdict = criterion::decide(spec);
        REQUIRE(verdict.finite);
        REQUIRE(verdict.modality == 0);
    }
}

TEST_CASE("torusless affine closures are always finite") {
    Rng rng(202);
    testsupport::SpecParams par;
    par.mode = Mode::affine;
    par.fixed_k = true;
    par.k_fixed = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto spec = testsupport::random_spec(rng, par);
        REQUIRE(criterion::decide(spec).finite);
    }
}

TEST_CASE("lift and direct projective routes agree") {
    Rng rng(203);
    testsupport::SpecParams par;
    par.components_max = 5;
    for (int trial = 0; trial < 40; ++trial) {
        auto spec = testsupport::random_spec(rng, par);
        auto lift = criterion::decide_projective(spec, criterion::Route::lift);
        auto direct = criterion::decide_projective(spec, criterion::Route::direct);
        REQUIRE(lift.finite == direct.finite);
        REQUIRE(lift.reports.size() == direct.reports.size());
        for (std::size_t i = 0; i < lift.reports.size(); ++i) {
            REQUIRE(lift.reports[i].face.indices == direct.reports[i].face.indices);
            REQUIRE(lift.reports[i].kernel == direct.reports[i].kernel);
        }
        REQUIRE(lift.witness_face == direct.witness_face);
    }
}

TEST_CASE("a finite verdict extends to every admissible face") {
    Rng rng(204);
    testsupport::SpecParams par;
    par.components_max = 5;
    for (int trial = 0; trial < 40; ++trial) {
        par.mode = trial % 2 == 0 ? Mode::affine : Mode::projective;
        auto spec = testsupport::random_spec(rng, par);
        if (!criterion::decide(spec).finite) continue;
        bool lifted = spec.mode == Mode::projective;
        auto pts = criterion::char_points(spec);
        int s = static_cast<int>(spec.components.size());
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < s; ++i)
                if (mask & (1u << i)) subset.push_back(i);
            if (!geometry::admissible_normal(pts, subset, lifted)) continue;
            REQUIRE(!criterion::face_condition(spec, subset).violation.has_value());
        }
    }
}

TEST_CASE("the verdict ignores the order of the components") {
    Rng rng(205);
    testsupport::SpecParams par;
    par.components_max = 5;
    for (int trial = 0; trial < 20; ++trial) {
        par.mode = trial % 2 == 0 ? Mode::affine : Mode::projective;
        auto spec = testsupport::random_spec(rng, par);
        ProblemSpec reversed = spec;
        std::reverse(reversed.components.begin(), reversed.components.end());
        REQUIRE(criterion::decide(spec).finite == criterion::decide(reversed).finite);
    }
}

TEST_CASE("module verdicts for independent and dependent characters") {
    ProblemSpec indep;
    indep.k = 3;
    indep.mode = Mode::projective;
    indep.components = {comp({1, 0, 0}, 2), comp({0, 1, 0}, 3), comp({0, 0, 1}, 4)};
    auto v1 = criterion::module_always_finite(indep);
    REQUIRE(v1.always_finite);
    REQUIRE(!v1.witness_face.has_value());

    ProblemSpec dep;
    dep.k = 1;
    dep.mode = Mode::affine;
    dep.components = {comp({1}, 1), comp({2}, 2)};
    auto v2 = criterion::module_always_finite(dep);
    REQUIRE(!v2.always_finite);
    REQUIRE(v2.witness_face.has_value());
    REQUIRE(v2.witness_face->indices == std::vector<int>{0, 1});
}

TEST_CASE("zero-degree components do not spoil module finiteness") {
    ProblemSpec spec;
    spec.k = 1;
    spec.mode = Mode::affine;
    spec.components = {comp({0}, 0), comp({0}, 0)};
    // Characters coincide but the degrees are zero: no form to vary.
    REQUIRE(criterion::module_always_finite(spec).always_finite);
}

TEST_CASE("the emitted witness vector is judged infinite") {
    ProblemSpec dep;
    dep.k = 1;
    dep.mode = Mode::affine;
    dep.components = {comp({1}, 1), comp({2}, 2)};
    auto witness = criterion::witness_vector(dep, {0, 1}, IntVector{2, -1});
    REQUIRE(witness.components[0].roots ==
            std::map<GaussianRational, int>{{g(0), 1}});
    REQUIRE(witness.components[1].roots.empty());
    REQUIRE(!criterion::decide(witness).finite);

    REQUIRE_THROWS_AS(criterion::witness_vector(dep, {0, 1}, IntVector{1, 1}), input_error);
    REQUIRE_THROWS_AS(criterion::witness_vector(dep, {0}, IntVector{1}), input_error);
}

TEST_CASE("dependent module faces always produce a working witness") {
    Rng rng(206);
    testsupport::SpecParams par;
    par.components_max = 4;
    par.degree_max = 4;
    for (int trial = 0; trial < 60; ++trial) {
        par.mode = trial % 2 == 0 ? Mode::affine : Mode::projective;
        auto spec = testsupport::random_spec(rng, par);
        auto mv = criterion::module_always_finite(spec);
        if (mv.always_finite) continue;
        const auto& face = mv.witness_face->indices;
        bool lifted = spec.mode == Mode::projective;

        // Rebuild the dependency over the positive-degree face components.
        std::vector<int> support;
        for (int i : face)
            if (spec.components[i].degree != 0) support.push_back(i);
        lattice::IntMatrix m(spec.k + (lifted ? 1 : 0), static_cast<int>(support.size()));
        for (std::size_t j = 0; j < support.size(); ++j) {
            for (int i = 0; i < spec.k; ++i)
                m.at(i, static_cast<int>(j)) = spec.components[support[j]].character[i];
            if (lifted) m.at(spec.k, static_cast<int>(j)) = 1;
        }
        auto kb = lattice::kernel_basis(m);
        REQUIRE(!kb.vectors.empty());
        IntVector beta(face.size(), Int(0));
        for (std::size_t j = 0; j < support.size(); ++j) {
            auto it = std::find(face.begin(), face.end(), support[j]);
            beta[it - face.begin()] = kb.vectors[0][j];
        }
        auto witness = criterion::witness_vector(spec, face, beta);
        REQUIRE(!criterion::decide(witness).finite);
    }
}
