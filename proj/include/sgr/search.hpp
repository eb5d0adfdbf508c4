#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "sgr/betti.hpp"
#include "sgr/criteria.hpp"
#include "sgr/gluing.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

/// Complete search window for gluing/extension candidates. Any a beyond
/// frobenius + min(B_1) has a - b1 in the part for every first Betti degree,
/// so the level-1 shifted check fails; no admissible candidate is missed.
struct SearchWindow {
    Deg a_max = 0;
    Deg b_max = 0;
    std::string rationale =
        "beyond frobenius + min(B1) every difference a - b1 is a member, "
        "so the level-1 condition fails";
};

inline SearchWindow make_search_window(const NumericalSemigroup& s1, const BettiTable<Deg>& t1,
                                       const NumericalSemigroup& s2, const BettiTable<Deg>& t2) {
    SearchWindow w;
    w.a_max = s1.frobenius() + (t1.pd() >= 1 ? t1.at(1).front() : 0);
    w.b_max = s2.frobenius() + (t2.pd() >= 1 ? t2.at(1).front() : 0);
    return w;
}

struct ExtensionHit {
    Deg m = 0;
    std::vector<Deg> u;  // lexicographically smallest factorization
    Verdict<Deg> verdict;
};

struct ExtensionSearchResult {
    Deg m_max = 0;
    std::vector<ExtensionHit> hits;  // sorted by m
};

/// Exhaustive SIFRE-extension search over the complete window
/// m <= frobenius + min(B_1); the verdict never depends on the scaling
/// factor, which is reported symbolically by the CLI.
inline ExtensionSearchResult search_extensions(const NumericalSemigroup& s_grp,
                                               Deg m_max_override = 0) {
    if (s_grp.content() != 1) throw ContentNotOne();
    auto table = betti_table(s_grp);
    ExtensionSearchResult res;
    res.m_max = m_max_override > 0
                    ? m_max_override
                    : s_grp.frobenius() + (table.pd() >= 1 ? table.at(1).front() : 0);
    for (Deg m = 2; m <= res.m_max; ++m) {
        if (!s_grp.contains(m) || s_grp.is_generator(m)) continue;
        Deg ell = 2;
        while (std::gcd(ell, m) != 1) ++ell;
        auto e = extend(s_grp, m, ell);
        auto v = extension_has_sifre(e, table);
        if (v.holds) res.hits.push_back({m, e.u, std::move(v)});
    }
    return res;
}

struct GluingSearchResult {
    SearchWindow window;
    std::vector<std::pair<Deg, Deg>> sifre;              // (a, b), sorted
    std::vector<std::pair<Deg, Deg>> unique_only;        // unique presentation, no SIFRE
    std::vector<std::pair<Deg, Deg>> neither;
    bool no_admissible_a = false;  // part-1 level condition fails for every a
};

/// Exhaustive gluing search over the complete window. The validity filter of
/// the numerical-gluing construction runs first; candidates partition into
/// SIFRE, unique-presentation-only and neither. When the part-1 shifted
/// condition fails for every a in the window, no partner semigroup can yield
/// a SIFRE gluing, which the result certifies.
inline GluingSearchResult search_gluings(const NumericalSemigroup& s1,
                                         const NumericalSemigroup& s2) {
    auto t1 = betti_table(s1);
    auto t2 = betti_table(s2);
    GluingSearchResult res;
    res.window = make_search_window(s1, t1, s2, t2);

    res.no_admissible_a = true;
    for (Deg a = 2; a <= res.window.a_max; ++a) {
        if (!s1.contains(a) || s1.is_generator(a)) continue;
        Verdict<Deg> part;
        detail::check_shifted_pairs(s1, t1, a, t1.pd(), part);
        if (part.holds) {
            res.no_admissible_a = false;
            break;
        }
    }

    for (Deg a = 2; a <= res.window.a_max; ++a) {
        if (!s1.contains(a) || s1.is_generator(a)) continue;
        for (Deg b = 2; b <= res.window.b_max; ++b) {
            if (!s2.contains(b) || s2.is_generator(b)) continue;
            if (std::gcd(a, b) != 1) continue;
            std::optional<GluingSpec> g;
            try {
                g = glue_numerical(s1, s2, a, b);
            } catch (const Error&) {
                continue;  // invalid candidate (overlap / non-minimal)
            }
            if (gluing_has_sifre(*g, t1, t2).holds)
                res.sifre.emplace_back(a, b);
            else if (gluing_unique_presentation(*g, t1, t2).holds)
                res.unique_only.emplace_back(a, b);
            else
                res.neither.emplace_back(a, b);
        }
    }
    return res;
}

}  // namespace sgr
