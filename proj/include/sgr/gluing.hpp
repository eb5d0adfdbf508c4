#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sgr/betti.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

/// Validated numerical gluing S = bS1 + aS2 with alpha = ab.
struct GluingSpec {
    NumericalSemigroup s1;      // unscaled parts
    NumericalSemigroup s2;
    Deg a = 0;                  // a in S1, b in S2
    Deg b = 0;
    NumericalSemigroup glued;   // generators {b*a_i} union {a*b_j}
    Deg alpha = 0;              // ab
};

inline GluingSpec glue_numerical(const NumericalSemigroup& s1, const NumericalSemigroup& s2,
                                 Deg a, Deg b) {
    if (s1.content() != 1 || s2.content() != 1) throw ContentNotOne();
    if (a < 2 || b < 2) throw DegenerateGluing();
    if (std::gcd(a, b) != 1) throw NotCoprime();
    if (s1.is_generator(a) || s2.is_generator(b)) throw DegreeIsGenerator();
    if (!s1.contains(a) || !s2.contains(b)) throw NotMember();
    std::vector<Deg> gens;
    std::set<Deg> left, right;
    for (Deg g : s1.generators()) {
        gens.push_back(b * g);
        left.insert(b * g);
    }
    for (Deg g : s2.generators()) {
        gens.push_back(a * g);
        right.insert(a * g);
    }
    for (Deg g : left)
        if (right.count(g)) throw GeneratorOverlap();
    GluingSpec spec{s1, s2, a, b, NumericalSemigroup(gens, /*strict_minimal=*/true), a * b};
    return spec;
}

/// Validated extension E = lS + N{m} with alpha = l*m; stores the
/// lexicographically smallest factorization of m over the base generators.
template <class SG>
struct ExtensionSpec {
    SG base;
    Deg ell = 0;
    typename SG::degree_type m;
    std::vector<Deg> u;     // factorization of m over the base generators
    SG extended;
    typename SG::degree_type alpha;  // ell * m
};

inline ExtensionSpec<NumericalSemigroup> extend(const NumericalSemigroup& base, Deg m, Deg ell) {
    if (!base.contains(m)) throw NotMember();
    if (base.is_generator(m)) throw DegreeIsGenerator();
    if (ell < 2 || std::gcd(ell, m) != 1) throw CoprimalityFailure();
    std::vector<Deg> gens;
    for (Deg g : base.generators()) gens.push_back(ell * g);
    gens.push_back(m);
    NumericalSemigroup ext(gens, /*strict_minimal=*/true);
    auto u = base.factorize_one(m);
    return {base, ell, m, *u, std::move(ext), ell * m};
}

inline ExtensionSpec<AffineSemigroup> extend(const AffineSemigroup& base, const Vec& m, Deg ell) {
    if (!base.contains(m)) throw NotMember();
    if (base.is_generator(m)) throw DegreeIsGenerator();
    bool coprime_component = false;
    for (Deg c : m)
        if (c != 0 && std::gcd(ell, c) == 1) coprime_component = true;
    if (ell < 2 || !coprime_component) throw CoprimalityFailure();
    std::vector<Vec> gens;
    for (const Vec& g : base.generators()) gens.push_back(vec_scale(ell, g));
    gens.push_back(m);
    AffineSemigroup ext(gens, /*strict_minimal=*/true);
    auto u = base.factorize_one(m);
    return {base, ell, m, *u, std::move(ext), vec_scale(ell, m)};
}

/// Betti degrees of a gluing from the tables of its parts:
///   B_i(S) = U_{p+q=i} [B_p(S1) + B_q(S2)]
///          U U_{p+q=i-1} [B_p(S1) + B_q(S2) + alpha],
/// with B_0 = {0}, empty above pd, and resulting pd = pd1 + pd2 + 1.
/// The scaling maps carry part degrees into S-degrees.
template <class D, class F1, class F2>
BettiTable<D> glued_betti(const BettiTable<D>& t1, const BettiTable<D>& t2, const D& alpha,
                          F1&& scale1, F2&& scale2) {
    const int pd = t1.pd() + t2.pd() + 1;
    BettiTable<D> out;
    out.degrees.resize(static_cast<std::size_t>(pd) + 1);
    for (int i = 0; i <= pd; ++i) {
        auto& level = out.degrees[static_cast<std::size_t>(i)];
        for (int p = 0; p <= t1.pd(); ++p) {
            int q = i - p;
            for (const D& x : t1.at(p))
                for (const D& y : t2.at(q))
                    level.push_back(deg_add(scale1(x), scale2(y)));
            q = i - 1 - p;
            for (const D& x : t1.at(p))
                for (const D& y : t2.at(q))
                    level.push_back(deg_add(deg_add(scale1(x), scale2(y)), alpha));
        }
        std::sort(level.begin(), level.end());
    }
    return out;
}

/// Betti table of a numerical gluing, by the closed-form recursion over the
/// directly computed part tables.
inline BettiTable<Deg> glued_betti(const GluingSpec& g) {
    auto t1 = betti_table(g.s1);
    auto t2 = betti_table(g.s2);
    const Deg b = g.b, a = g.a;
    return glued_betti(t1, t2, g.alpha, [b](Deg x) { return b * x; },
                       [a](Deg y) { return a * y; });
}

/// Betti table of an extension from the base table.
inline BettiTable<Deg> extension_betti(const ExtensionSpec<NumericalSemigroup>& e,
                                       const BettiTable<Deg>& base_table) {
    const Deg ell = e.ell;
    return glued_betti(base_table, trivial_betti_table(Deg{0}), e.alpha,
                       [ell](Deg x) { return ell * x; }, [](Deg y) { return y; });
}

inline BettiTable<Vec> extension_betti(const ExtensionSpec<AffineSemigroup>& e,
                                       const BettiTable<Vec>& base_table) {
    const Deg ell = e.ell;
    Vec zero(e.base.ambient_dim(), 0);
    return glued_betti(base_table, trivial_betti_table(zero), e.alpha,
                       [ell](const Vec& x) { return vec_scale(ell, x); },
                       [](const Vec& y) { return y; });
}

/// One stage of the complete-intersection family E_j = 2E_{j-1} + N{a_j}.
struct CiStep {
    AffineSemigroup semigroup;
    Vec a_j;                   // the adjoined degree
    BettiTable<Vec> table;     // recursion table of E_j
};

/// Builds the family E_1, ..., E_depth over S = <u_1 e_1, ..., u_n e_n> with
/// a = (-u_1, u_2, ..., u_n), a_1 = (u_1, ..., u_n), a_j = a_{j-1} + 2a_{j-2}.
/// Each stage is validated as an extension (l = 2) of the previous one.
inline std::vector<CiStep> ci_family(std::size_t n, const std::vector<Deg>& u, int depth) {
    if (n < 2 || u.size() != n) throw InvalidWeights();
    bool odd = false;
    for (Deg w : u) {
        if (w < 1) throw InvalidWeights();
        if (w % 2 != 0) odd = true;
    }
    if (!odd) throw CoprimalityFailure();

    std::vector<Vec> base_gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = u[i];
        base_gens.push_back(std::move(e));
    }
    AffineSemigroup base(base_gens);
    Vec a0(u);
    a0[0] = 0;
    Vec a_prev2 = a0;   // a_0
    Vec a_prev = u;     // a_1
    Vec zero(n, 0);
    BettiTable<Vec> table = trivial_betti_table(zero);

    std::vector<CiStep> steps;
    AffineSemigroup cur = base;
    for (int j = 1; j <= depth; ++j) {
        Vec aj = (j == 1) ? a_prev : vec_add(a_prev, vec_scale(2, a_prev2));
        auto ext = extend(cur, aj, 2);
        table = glued_betti(table, trivial_betti_table(zero), vec_scale(2, aj),
                            [](const Vec& x) { return vec_scale(2, x); },
                            [](const Vec& y) { return y; });
        steps.push_back({ext.extended, aj, table});
        cur = ext.extended;
        if (j > 1) {
            a_prev2 = a_prev;
            a_prev = aj;
        }
    }
    return steps;
}

}  // namespace sgr
