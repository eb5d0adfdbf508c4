#pragma once

#include <array>
#include <vector>

#include "sgr/betti.hpp"
#include "sgr/criteria.hpp"
#include "sgr/gluing.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

/// Minimal-relation data of a 3-generated non-symmetric numerical semigroup:
/// alpha[p] is the least k > 0 with k*m_p a combination of the other two, and
/// cross[p][q] the exponent of m_q in that (unique) combination.
struct HerzogData {
    std::array<Deg, 3> m{};
    std::array<Deg, 3> alpha{};
    std::array<std::array<Deg, 3>, 3> cross{};  // cross[p][q], p != q, 0-based
    std::array<Deg, 3> d{};                     // first-Betti degrees d_p = alpha_p m_p
    std::array<Deg, 2> b{};                     // second-Betti degrees b1 >= or <= b2 per formula
};

inline HerzogData herzog_data(const NumericalSemigroup& s_grp) {
    if (s_grp.embedding_dim() != 3) throw NotThreeGenerated();
    if (s_grp.content() != 1) throw ContentNotOne();
    if (s_grp.symmetry_class() == SymmetryClass::symmetric) throw IsSymmetric();
    HerzogData h;
    const auto& g = s_grp.generators();
    for (int p = 0; p < 3; ++p) h.m[static_cast<std::size_t>(p)] = g[static_cast<std::size_t>(p)];
    for (int p = 0; p < 3; ++p) {
        const int q = (p + 1) % 3, r = (p + 2) % 3;
        NumericalSemigroup pair({h.m[q], h.m[r]});
        Deg k = 1;
        while (!pair.contains(k * h.m[p])) ++k;
        auto facts = pair.factorizations(k * h.m[p]);
        // Non-symmetric structure forces a unique factorization at the
        // minimal level; several would contradict it.
        if (facts.size() != 1) throw ConstraintViolation();
        const auto& gens_pair = pair.generators();  // sorted, may swap q and r
        h.alpha[p] = k;
        for (std::size_t t = 0; t < 2; ++t) {
            int idx = gens_pair[t] == h.m[q] ? q : r;
            h.cross[p][idx] = facts.front()[t];
        }
        h.d[p] = k * h.m[p];
    }
    // Non-symmetric characterization: all cross entries positive and columns
    // summing to alpha.
    for (int p = 0; p < 3; ++p) {
        const int q = (p + 1) % 3, r = (p + 2) % 3;
        if (h.cross[p][q] <= 0 || h.cross[p][r] <= 0) throw ConstraintViolation();
        if (h.cross[q][p] + h.cross[r][p] != h.alpha[p]) throw ConstraintViolation();
    }
    h.b[0] = h.cross[1][2] * h.m[2] + h.d[0];
    h.b[1] = h.cross[2][1] * h.m[1] + h.d[0];
    // All six defining expressions must agree.
    if (h.b[0] != h.cross[2][0] * h.m[0] + h.d[1] || h.b[0] != h.cross[0][1] * h.m[1] + h.d[2] ||
        h.b[1] != h.cross[0][2] * h.m[2] + h.d[1] || h.b[1] != h.cross[1][0] * h.m[0] + h.d[2])
        throw ConstraintViolation();
    return h;
}

/// The finite coefficient box 0 < u_p < min(cross_qp, cross_rp) of extensions
/// with a SIFRE; empty exactly when some cross entry equals 1.
inline std::vector<std::vector<Deg>> sifre_extension_coefficients(const HerzogData& h) {
    std::array<Deg, 3> bound{};
    bool has_one = false;
    for (int p = 0; p < 3; ++p) {
        const int q = (p + 1) % 3, r = (p + 2) % 3;
        bound[p] = std::min(h.cross[q][p], h.cross[r][p]);
    }
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (p != q && h.cross[p][q] == 1) has_one = true;
    std::vector<std::vector<Deg>> out;
    for (Deg u1 = 1; u1 < bound[0]; ++u1)
        for (Deg u2 = 1; u2 < bound[1]; ++u2)
            for (Deg u3 = 1; u3 < bound[2]; ++u3) out.push_back({u1, u2, u3});
    // Consistency: the box is empty exactly when some cross entry equals 1.
    if (out.empty() != has_one) throw ConstraintViolation();
    return out;
}

/// Bresinsky's parametrization of 4-generated symmetric non-complete-
/// intersection semigroups. The eight defined cross entries are indexed as
/// cross21, cross31, cross32, cross42, cross13, cross43, cross14, cross24.
struct BresinskyData {
    std::array<Deg, 4> alpha{};
    Deg c21 = 0, c31 = 0, c32 = 0, c42 = 0, c13 = 0, c43 = 0, c14 = 0, c24 = 0;
    std::array<Deg, 4> m{};
    std::array<Deg, 5> d{};  // S-degrees of the five defining binomials
    NumericalSemigroup semigroup{std::vector<Deg>{1}};
};

inline BresinskyData bresinsky_semigroup(Deg c21, Deg c31, Deg c32, Deg c42, Deg c13, Deg c43,
                                         Deg c14, Deg c24) {
    BresinskyData b;
    b.c21 = c21; b.c31 = c31; b.c32 = c32; b.c42 = c42;
    b.c13 = c13; b.c43 = c43; b.c14 = c14; b.c24 = c24;
    b.alpha = {c21 + c31, c32 + c42, c13 + c43, c14 + c24};
    for (Deg c : {c21, c31, c32, c42, c13, c43, c14, c24})
        if (c <= 0) throw ConstraintViolation();
    if (c21 >= b.alpha[0] || c31 >= b.alpha[0] || c32 >= b.alpha[1] || c42 >= b.alpha[1] ||
        c13 >= b.alpha[2] || c43 >= b.alpha[2] || c14 >= b.alpha[3] || c24 >= b.alpha[3])
        throw ConstraintViolation();
    b.m[0] = b.alpha[1] * b.alpha[2] * c14 + c32 * c13 * c24;
    b.m[1] = b.alpha[2] * b.alpha[3] * c21 + c31 * c43 * c24;
    b.m[2] = b.alpha[0] * b.alpha[3] * c32 + c14 * c42 * c31;
    b.m[3] = b.alpha[0] * b.alpha[1] * c43 + c42 * c21 * c13;
    NumericalSemigroup s({b.m[0], b.m[1], b.m[2], b.m[3]});
    if (s.embedding_dim() != 4 || s.content() != 1) throw NotMinimallyFourGenerated();
    if (s.symmetry_class() != SymmetryClass::symmetric) throw NotSymmetric();
    b.semigroup = s;
    b.d[0] = b.alpha[0] * b.m[0];
    b.d[1] = b.alpha[1] * b.m[1];
    b.d[2] = b.alpha[2] * b.m[2];
    b.d[3] = b.alpha[3] * b.m[3];
    b.d[4] = c43 * b.m[2] + c21 * b.m[0];
    if (b.d[4] != c32 * b.m[1] + c14 * b.m[3]) throw ConstraintViolation();
    return b;
}

/// Extension criterion for a Bresinsky semigroup, entirely in terms of the
/// parameters: u_p below the column minimum, at most one u_p = 0, and the
/// applicable zero-column implication.
inline bool bresinsky_extension_has_sifre(const BresinskyData& b, const std::array<Deg, 4>& u) {
    const std::array<Deg, 4> bound = {std::min(b.c21, b.c31), std::min(b.c32, b.c42),
                                      std::min(b.c13, b.c43), std::min(b.c14, b.c24)};
    int zeros = 0;
    for (std::size_t p = 0; p < 4; ++p) {
        if (u[p] < 0 || u[p] >= bound[p]) return false;
        if (u[p] == 0) ++zeros;
    }
    if (zeros > 1) return false;
    if (u[0] == 0 && !(b.c32 - b.c42 < u[1] || b.c13 - b.c43 < u[2])) return false;
    if (u[1] == 0 && !(b.c43 - b.c13 < u[2] || b.c24 - b.c14 < u[3])) return false;
    if (u[2] == 0 && !(b.c31 - b.c21 < u[0] || b.c14 - b.c24 < u[3])) return false;
    if (u[3] == 0 && !(b.c21 - b.c31 < u[0] || b.c42 - b.c32 < u[1])) return false;
    return true;
}

/// Exhaustive extension scan of a 4-generated pseudo-symmetric semigroup over
/// the complete candidate window m <= frobenius + min(B_1). Expected outcome:
/// every verdict false (no extension of such a semigroup admits a SIFRE).
struct ScanEntry {
    Deg m = 0;
    Verdict<Deg> verdict;
};

inline std::vector<ScanEntry> pseudo_symmetric_extension_scan(const NumericalSemigroup& s_grp) {
    if (s_grp.embedding_dim() != 4 ||
        s_grp.symmetry_class() != SymmetryClass::pseudo_symmetric)
        throw NotPseudoSymmetric();
    auto table = betti_table(s_grp);
    const Deg window = s_grp.frobenius() + table.at(1).front();
    std::vector<ScanEntry> out;
    for (Deg m = 2; m <= window; ++m) {
        if (!s_grp.contains(m) || s_grp.is_generator(m)) continue;
        Deg ell = 2;
        while (std::gcd(ell, m) != 1) ++ell;
        auto e = extend(s_grp, m, ell);
        out.push_back({m, extension_has_sifre(e, table)});
    }
    return out;
}

/// Bounded search for a 4-generated pseudo-symmetric numerical semigroup with
/// generators <= bound; returns the first hit in lexicographic order.
inline std::optional<NumericalSemigroup> find_pseudo_symmetric(Deg bound) {
    for (Deg m1 = 2; m1 <= bound; ++m1)
        for (Deg m2 = m1 + 1; m2 <= bound; ++m2)
            for (Deg m3 = m2 + 1; m3 <= bound; ++m3)
                for (Deg m4 = m3 + 1; m4 <= bound; ++m4) {
                    if (std::gcd(std::gcd(m1, m2), std::gcd(m3, m4)) != 1) continue;
                    NumericalSemigroup s({m1, m2, m3, m4});
                    if (s.embedding_dim() != 4) continue;
                    if (s.symmetry_class() == SymmetryClass::pseudo_symmetric) return s;
                }
    return std::nullopt;
}

}  // namespace sgr
