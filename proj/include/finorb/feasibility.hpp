#pragma once

// Exact rational linear feasibility by Gaussian elimination on equalities
// followed by Fourier-Motzkin elimination on the inequalities, with witness
// reconstruction by back-substitution. All comparisons are exact; intended
// for desk-scale systems (a dozen constraints, single-digit dimensions).

#include <finorb/rational.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <vector>

namespace finorb {

struct LinearConstraint {
    RationalVector coeffs;  // length = dimension
    Rat rhs = 0;
    bool equality = false;  // true: coeffs*x == rhs, false: coeffs*x >= rhs

    static LinearConstraint eq(RationalVector c, Rat b) {
        return {std::move(c), std::move(b), true};
    }
    static LinearConstraint ge(RationalVector c, Rat b) {
        return {std::move(c), std::move(b), false};
    }
};

namespace detail {

struct Inequality {
    RationalVector a;
    Rat b;
};

// Scale so the coefficient vector is primitive integer; keeps orientation.
inline void normalize(Inequality& c) {
    Int l = 1;
    for (const Rat& q : c.a) l = lcm(l, denominator(q));
    Int g = 0;
    for (const Rat& q : c.a) g = gcd(g, numerator(q) * (l / denominator(q)));
    if (g == 0) return;
    Rat f = make_rat(l, g);
    for (Rat& q : c.a) q *= f;
    c.b *= f;
}

// Deduplicates same-direction constraints keeping the strongest bound.
// Returns false if a trivially infeasible constant constraint appears.
inline bool prune(std::vector<Inequality>& cons) {
    std::map<RationalVector, Rat> best;
    for (Inequality& c : cons) {
        normalize(c);
        bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Rat& q) { return q == 0; });
        if (zero) {
            if (c.b > 0) return false;
            continue;
        }
        auto [it, fresh] = best.emplace(c.a, c.b);
        if (!fresh && c.b > it->second) it->second = c.b;
    }
    cons.clear();
    for (auto& [a, b] : best) cons.push_back({a, b});
    return true;
}

}  // namespace detail

// Returns a rational point satisfying all constraints, or nullopt if the
// system is infeasible.
inline std::optional<RationalVector> feasible_point(const std::vector<LinearConstraint>& system,
                                                    int dim) {
    using detail::Inequality;
    std::vector<Inequality> eqs, ineqs;
    for (const LinearConstraint& c : system) {
        assert(static_cast<int>(c.coeffs.size()) == dim);
        if (c.equality)
            eqs.push_back({c.coeffs, c.rhs});
        else
            ineqs.push_back({c.coeffs, c.rhs});
    }

    // Equalities: eliminate one variable each, recording var = expr.
    struct Substitution {
        int var;
        RationalVector expr;  // x[var] = expr . x + expr_b  (expr[var] = 0)
        Rat expr_b;
    };
    std::vector<Substitution> subs;
    std::vector<bool> eliminated(dim, false);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        Inequality& row = eqs[e];
        int pivot = -1;
        for (int v = 0; v < dim; ++v)
            if (!eliminated[v] && row.a[v] != 0) { pivot = v; break; }
        if (pivot < 0) {
            if (row.b != 0) return std::nullopt;
            continue;
        }
        Rat pc = row.a[pivot];
        Substitution s;
        s.var = pivot;
        s.expr.assign(dim, Rat(0));
        for (int v = 0; v < dim; ++v)
            if (v != pivot) s.expr[v] = -row.a[v] / pc;
        s.expr_b = row.b / pc;
        auto substitute = [&](Inequality& c) {
            Rat f = c.a[pivot];
            if (f == 0) return;
            c.a[pivot] = 0;
            for (int v = 0; v < dim; ++v) c.a[v] += f * s.expr[v];
            c.b -= f * s.expr_b;
        };
        for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) substitute(eqs[e2]);
        for (Inequality& c : ineqs) substitute(c);
        subs.push_back(std::move(s));
        eliminated[pivot] = true;
    }

    // Fourier-Motzkin on the remaining variables.
    struct Step {
        int var;
        std::vector<Inequality> lowers;  // coefficient on var positive
        std::vector<Inequality> uppers;  // coefficient on var negative
    };
    std::vector<Step> steps;
    std::vector<int> remaining;
    for (int v = 0; v < dim; ++v)
        if (!eliminated[v]) remaining.push_back(v);

    if (!detail::prune(ineqs)) return std::nullopt;
    while (!remaining.empty()) {
        // Cheapest variable first: fewest pairwise combinations.
        int chosen = -1;
        long best_cost = -1;
        std::size_t chosen_pos = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            int v = remaining[i];
            long pos = 0, neg = 0;
            for (const Inequality& c : ineqs) {
                if (c.a[v] > 0) ++pos;
                else if (c.a[v] < 0) ++neg;
            }
            long cost = pos * neg;
            if (chosen < 0 || cost < best_cost) {
                chosen = v;
                best_cost = cost;
                chosen_pos = i;
            }
        }
        remaining.erase(remaining.begin() + chosen_pos);

        Step step;
        step.var = chosen;
        std::vector<Inequality> rest;
        for (Inequality& c : ineqs) {
            if (c.a[chosen] > 0)
                step.lowers.push_back(c);
            else if (c.a[chosen] < 0)
                step.uppers.push_back(c);
            else
                rest.push_back(c);
        }
        for (const Inequality& lo : step.lowers)
            for (const Inequality& up : step.uppers) {
                Inequality comb;
                comb.a.assign(dim, Rat(0));
                Rat fl = -up.a[chosen];  // positive
                Rat fu = lo.a[chosen];   // positive
                for (int v = 0; v < dim; ++v) comb.a[v] = fl * lo.a[v] + fu * up.a[v];
                comb.b = fl * lo.b + fu * up.b;
                rest.push_back(std::move(comb));
            }
        ineqs = std::move(rest);
        if (!detail::prune(ineqs)) return std::nullopt;
        steps.push_back(std::move(step));
    }

    // Feasible; rebuild a witness.
    RationalVector x(dim, Rat(0));
    auto eval = [&](const Inequality& c, int skip) {
        Rat s = c.b;
        for (int v = 0; v < dim; ++v)
            if (v != skip) s -= c.a[v] * x[v];
        return s;  // residual: c.a[skip]*x[skip] >= s
    };
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        std::optional<Rat> lo, hi;
        for (const Inequality& c : it->lowers) {
            Rat bound = eval(c, it->var) / c.a[it->var];
            if (!lo || bound > *lo) lo = bound;
        }
        for (const Inequality& c : it->uppers) {
            Rat bound = eval(c, it->var) / c.a[it->var];
            if (!hi || bound < *hi) hi = bound;
        }
        if (lo && hi) {
            assert(*lo <= *hi);
            x[it->var] = (*lo + *hi) / 2;
        } else if (lo) {
            x[it->var] = *lo;
        } else if (hi) {
            x[it->var] = *hi;
        }
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Rat v = it->expr_b;
        for (int j = 0; j < dim; ++j) v += it->expr[j] * x[j];
        x[it->var] = v;
    }

    for (const LinearConstraint& c : system) {
        Rat s = 0;
        for (int v = 0; v < dim; ++v) s += c.coeffs[v] * x[v];
        assert(c.equality ? s == c.rhs : s >= c.rhs);
        (void)s;
    }
    return x;
}

}  // namespace finorb
