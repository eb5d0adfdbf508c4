#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sgr/divisor_complex.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

/// Betti S-degrees per homological index. degrees[0] = {0}; degrees[i] for
/// 1 <= i <= pd are sorted multisets (repeats matter); nothing is stored
/// beyond pd.
template <class D>
struct BettiTable {
    std::vector<std::vector<D>> degrees;

    int pd() const { return static_cast<int>(degrees.size()) - 1; }

    /// Multiset at index i under the normalized convention: {0} at i = 0,
    /// empty above pd.
    const std::vector<D>& at(int i) const {
        static const std::vector<D> empty;
        if (i < 0 || i > pd()) return empty;
        return degrees[static_cast<std::size_t>(i)];
    }

    long long multiplicity(int i, const D& d) const {
        const auto& level = at(i);
        auto range = std::equal_range(level.begin(), level.end(), d);
        return range.second - range.first;
    }

    bool operator==(const BettiTable& o) const { return degrees == o.degrees; }
};

/// Table of a free semigroup ring (no relations): B_0 = {0}, pd = 0.
template <class D>
BettiTable<D> trivial_betti_table(const D& zero) {
    BettiTable<D> t;
    t.degrees.push_back({zero});
    return t;
}

/// Betti multiplicity at a single degree: rank of H~_{i-1} of the divisor
/// complex at s. Works for numerical and affine semigroups alike.
template <class SG>
long long betti_multiplicity(const SG& s_grp, const typename SG::degree_type& s, int i) {
    auto c = divisor_complex(s_grp, s);
    auto ranks = reduced_homology_ranks(c);
    if (i < 0 || static_cast<std::size_t>(i) >= ranks.size()) return 0;
    return ranks[static_cast<std::size_t>(i)];
}

/// Full Betti table of a content-1 numerical semigroup, by squarefree divisor
/// complexes over every member s <= frobenius + sum of generators. Beyond that
/// bound every complex is the full simplex, hence acyclic.
inline BettiTable<Deg> betti_table(const NumericalSemigroup& s_grp) {
    if (s_grp.content() != 1) throw ContentNotOne();
    const auto& gens = s_grp.presentation();
    const Deg bound = s_grp.frobenius() +
                      std::accumulate(gens.begin(), gens.end(), Deg{0});
    std::vector<std::vector<Deg>> levels(gens.size());  // index i-1 holds B_i
    for (Deg s = 1; s <= bound; ++s) {
        if (!s_grp.contains(s)) continue;
        auto c = divisor_complex(s_grp, s);
        auto ranks = reduced_homology_ranks(c);
        for (std::size_t k = 1; k < ranks.size(); ++k)
            for (int r = 0; r < ranks[k]; ++r)
                if (k - 1 < levels.size()) levels[k - 1].push_back(s);
    }
    BettiTable<Deg> t;
    t.degrees.push_back({0});
    for (auto& level : levels) {
        if (level.empty()) break;
        std::sort(level.begin(), level.end());
        t.degrees.push_back(std::move(level));
    }
    return t;
}

}  // namespace sgr
